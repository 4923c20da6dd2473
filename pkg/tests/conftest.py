import random
from pathlib import Path

import pytest

from drinfeld_charpoly import fq_poly
from drinfeld_charpoly.drinfeld import DrinfeldModule
from drinfeld_charpoly.ff_tower import FieldTower, FqField, make_field_tower

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def f25() -> FqField:
    """F_25 = F_5[z]/(z^2 + 2)."""
    return FqField(5, 2, fq_poly.first_irreducible(FqField(5), 2))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240917)


@pytest.fixture
def f8_tower() -> FieldTower:
    """F_8 = F_2[t]/(t^3 + t + 1)."""
    return make_field_tower(2, ell=[1, 1, 0, 1])


@pytest.fixture
def f8_module(f8_tower) -> DrinfeldModule:
    """Rank 4 over F_8: phi_x = (t + 1) + t^2 τ + τ^2 + (t^2 + t) τ^3 + t τ^4."""
    el = f8_tower.element
    return DrinfeldModule(
        f8_tower,
        el([1, 1]),
        [el([0, 0, 1]), el([1]), el([0, 1, 1]), el([0, 1])],
    )


@pytest.fixture
def example1_tower() -> FieldTower:
    """F_625 = F_5[t]/(t^4 + 4t^2 + 4t + 2)."""
    return make_field_tower(5, ell=[2, 4, 4, 0, 1])


@pytest.fixture
def example1_module(example1_tower) -> DrinfeldModule:
    """Rank 3 with gamma_x = t^3 + t^2 + t + 3 of degree 2 over F_5."""
    el = example1_tower.element
    return DrinfeldModule(example1_tower, el([3, 1, 1, 1]), [el([0, 1]), el([1, 0, 0, 1]), el([1])])


@pytest.fixture
def f25_tower() -> FieldTower:
    K = f25()
    return FieldTower(K, fq_poly.first_irreducible(K, 3))
