from fractions import Fraction

import hypothesis.strategies as st

from qcorona.cpoly import CPoly
from qcorona.hpoly import HPoly
from qcorona.scalars import GaussRat, Quat

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)

gauss_rats = st.builds(GaussRat, small_fractions, small_fractions)

quats = st.builds(Quat, small_fractions, small_fractions, small_fractions, small_fractions)

nonzero_quats = quats.filter(bool)


def cpolys(max_degree: int = 4):
    return st.lists(gauss_rats, min_size=0, max_size=max_degree + 1).map(CPoly)


def nonzero_cpolys(max_degree: int = 4):
    return cpolys(max_degree).filter(lambda p: not p.is_zero())


def hpolys(max_degree: int = 4):
    return st.lists(quats, min_size=0, max_size=max_degree + 1).map(HPoly)


def nonzero_hpolys(max_degree: int = 4):
    return hpolys(max_degree).filter(lambda f: not f.is_zero())


def q_minus(c: Quat) -> HPoly:
    """The monic linear polynomial q - c."""
    return HPoly([-c, 1])
