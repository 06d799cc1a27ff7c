import random

import pytest

from lspacecert.mcg import TwistWord, apply_word, standard_curve_system


def system_pool(g):
    system = standard_curve_system(g)
    return list(system.alphas) + list(system.betas) + [system.c]


def random_twist_word(rng, g, max_len=5, max_power=2):
    pool = system_pool(g)
    powers = [p for p in range(-max_power, max_power + 1) if p != 0]
    length = rng.randint(1, max_len)
    return TwistWord(
        tuple((rng.choice(pool), rng.choice(powers)) for _ in range(length))
    )


def random_curve(rng, g, max_len=4):
    """A random simple curve: a system curve dragged by a short twist word."""
    base = rng.choice(system_pool(g))
    return apply_word(random_twist_word(rng, g, max_len=max_len), base)


@pytest.fixture
def rng():
    return random.Random(20260810)
