"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from seqalg.cli.syntax import Add, Call, Compose, Div, Mul, Name, Neg, Num, Pow, Sub
from seqalg.coeff import Gaussian
from seqalg.seq_core import Seq

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=12)
nonzero_fractions = fractions.filter(lambda q: q != 0)
gaussians = st.builds(Gaussian, fractions, fractions)


@st.composite
def polys(draw, min_size=1, max_size=5, unit_head=False):
    """Small polynomials; `unit_head` forces coefficient 0 to be 1."""
    coeffs = draw(st.lists(st.integers(-6, 6).map(Fraction), min_size=min_size, max_size=max_size))
    if unit_head:
        coeffs[0] = Fraction(1)
    return Seq.from_coeffs(coeffs)


_leaves = st.one_of(
    st.integers(0, 20).map(lambda v: Num(value=v)),
    st.sampled_from(["x", "f", "g", "expx", "catalan"]).map(lambda n: Name(name=n)),
)


def _branches(children):
    binary = st.sampled_from([Add, Sub, Mul, Div, Compose, Pow])
    return st.one_of(
        st.builds(lambda node, a, b: node(left=a, right=b), binary, children, children),
        children.map(lambda e: Neg(operand=e)),
        st.builds(
            lambda name, args: Call(name=name, args=tuple(args)),
            st.sampled_from(["deriv", "shuffle", "pow"]),
            st.lists(children, min_size=1, max_size=2),
        ),
    )


exprs = st.recursive(_leaves, _branches, max_leaves=8)
