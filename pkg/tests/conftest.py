import random

import pytest

from cubechains.cubical import LabelSet, random_complex


def random_corpus(count, n=4, seed=20240917):
    rng = random.Random(seed)
    labels = LabelSet(range(1, n + 1))
    return [random_complex(labels, rng, p_keep=rng.choice([0.6, 0.75, 0.9, 0.95, 0.98]))
            for _ in range(count)]


@pytest.fixture(scope="session")
def corpus4():
    return random_corpus(60)


FIGURE_HOLES = [((2, 0), (3, 1)), ((3, 1), (4, 2)), ((1, 2), (2, 3)), ((1, 3), (2, 4)),
                ((1, 3), (2, 3))]


def figure_complex(literal=False):
    """The staircase example in [0, (5, 4)].

    ``literal`` keeps the edge [(2,0),(3,0)], which the drawing leaves out.
    """
    from cubechains.euclid import EuclideanComplex
    holes = FIGURE_HOLES if literal else FIGURE_HOLES + [((2, 0), (3, 0))]
    return EuclideanComplex.box_minus((5, 4), holes)
