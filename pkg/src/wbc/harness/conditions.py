"""Theorem conditions written against the ops interface.

Every function takes an ops backend ``O`` (see :mod:`wbc.harness.ops`),
the candidate ``y`` (a single element, or with :class:`TableOps` the
array of all elements) and context elements in the backend's own
representation.  Results are booleans or boolean arrays.
"""
from __future__ import annotations


def fixed(O, y, vaw):
    """``y vaw y = y``."""
    return O.eq(O.mul(y, vaw, y), y)


def bc_definition(O, y, a, b, c, v, w):
    vaw = O.mul(v, a, w)
    yv, wy = O.mul(y, v), O.mul(w, y)
    return (O.two_sided_in(b, y, wy) & O.two_sided_in(yv, y, c)
            & O.eq(O.mul(y, vaw, b), b) & O.eq(O.mul(c, vaw, y), c))


def hybrid_definition(O, y, a, b, c, v, w):
    vaw = O.mul(v, a, w)
    return (fixed(O, y, vaw) & O.same_right(O.mul(y, v), b)
            & O.rann_eq(O.mul(w, y), c))


def annihilator_definition(O, y, a, b, c, v, w):
    vaw = O.mul(v, a, w)
    return (fixed(O, y, vaw) & O.lann_eq(O.mul(y, v), b)
            & O.rann_eq(O.mul(w, y), c))


def along_definition(O, y, a, d, v, w):
    vaw = O.mul(v, a, w)
    return (O.eq(O.mul(y, vaw, d), d) & O.eq(O.mul(d, vaw, y), d)
            & O.left_in(d, O.mul(w, y)) & O.right_in(d, O.mul(y, v)))


def bott_duffin_definition(O, z, a, v, w, e, f):
    vaw = O.mul(v, a, w)
    return (O.eq(O.mul(e, w, z), z) & O.eq(O.mul(z, v, f), z)
            & O.eq(O.mul(z, vaw, e), e) & O.eq(O.mul(f, vaw, z), f))


# ----------------------------------------------------------------------------
# eight descriptions of the weighted (b,c)-inverse


def eight_way(gb, gc):
    """Conditions (i)-(vi), which involve ``y``; ``gb``/``gc`` are inner
    inverses of ``b``/``c`` in the backend representation (``None`` if
    not regular)."""
    reg_b, reg_c = gb is not None, gc is not None

    def c2(O, y, a, b, c, v, w):
        vaw = O.mul(v, a, w)
        return fixed(O, y, vaw) & O.same_right(O.mul(y, v), b) & O.same_left(O.mul(w, y), c)

    def c3(O, y, a, b, c, v, w):
        vaw = O.mul(v, a, w)
        return (fixed(O, y, vaw) & O.lann_eq(O.mul(y, v), b)
                & O.same_left(O.mul(w, y), c) & reg_b)

    def c4(O, y, a, b, c, v, w):
        vaw = O.mul(v, a, w)
        return (fixed(O, y, vaw) & O.same_right(O.mul(y, v), b)
                & O.rann_eq(O.mul(w, y), c) & reg_c)

    def c5(O, y, a, b, c, v, w):
        return annihilator_definition(O, y, a, b, c, v, w) & reg_b & reg_c

    def c6(O, y, a, b, c, v, w):
        if not (reg_b and reg_c):
            return O.eq(y, y) & False
        vaw = O.mul(v, a, w)
        bb, cc = O.mul(b, gb), O.mul(gc, c)
        return (O.eq(y, O.mul(bb, y)) & O.eq(bb, O.mul(y, vaw, bb))
                & O.eq(O.mul(y, cc), y) & O.eq(cc, O.mul(cc, vaw, y)))

    return [("(i) definition", bc_definition), ("(ii)", c2), ("(iii)", c3),
            ("(iv)", c4), ("(v)", c5), ("(vi)", c6)]


def eight_way_existence(O, gb, gc, a, b, c, v, w):
    """Condition (vii): ``bb^- ∈ R(c^-cvawbb^-)`` and ``c^-c ∈ (c^-cvawbb^-)R``."""
    if gb is None or gc is None:
        return False
    bb, cc = O.mul(b, gb), O.mul(gc, c)
    x = O.mul(cc, v, a, w, bb)
    return bool(O.left_in(x, bb) & O.right_in(x, cc))


# ----------------------------------------------------------------------------
# existence via decompositions


def five_way(O, a, b, c, v, w):
    """Conditions (ii)-(v) describing existence through direct sums."""
    vaw = O.mul(v, a, w)
    cvaw, vawb = O.mul(c, vaw), O.mul(vaw, b)
    reg_mid = bool(O.regular(O.mul(cvaw, b)))
    left_split = O.lann_direct(cvaw, b) and O.lann_meets_left(vaw, c)
    right_split = O.rann_direct(vawb, c) and O.rann_meets_right(vaw, b)
    return [("(ii)", bool(O.regular(b)) and left_split),
            ("(iii)", left_split and reg_mid),
            ("(iv)", bool(O.regular(c)) and right_split),
            ("(v)", right_split and reg_mid)]


def hybrid_split(O, a, b, c, v, w) -> bool:
    """``R = vawbR ⊕ rann(c)`` and ``rann(vaw) ∩ bR = 0``."""
    vaw = O.mul(v, a, w)
    return O.rann_direct(O.mul(vaw, b), c) and O.rann_meets_right(vaw, b)


def hybrid_second_form(O, y, a, b, c, v, w):
    """``yvawb = b``, ``cvawy = c``, ``yvR ⊆ bR`` and ``rann(c) ⊆ rann(wy)``."""
    vaw = O.mul(v, a, w)
    return (O.eq(O.mul(y, vaw, b), b) & O.eq(O.mul(c, vaw, y), c)
            & O.right_in(b, O.mul(y, v)) & O.rann_sub(c, O.mul(w, y)))


def annihilator_second_form(O, y, a, b, c, v, w):
    """``yvawb = b``, ``cvawy = c``, ``rann(c) ⊆ rann(wy)`` and ``lann(b) ⊆ lann(yv)``."""
    vaw = O.mul(v, a, w)
    return (O.eq(O.mul(y, vaw, b), b) & O.eq(O.mul(c, vaw, y), c)
            & O.rann_sub(c, O.mul(w, y)) & O.lann_sub(b, O.mul(y, v)))


# ----------------------------------------------------------------------------
# inverses along an element


def _two_sided(O, y, vaw, d):
    return O.eq(O.mul(y, vaw, d), d) & O.eq(O.mul(d, vaw, y), d)


def along_seven_way():
    def c2(O, y, a, d, v, w):
        vaw = O.mul(v, a, w)
        return (_two_sided(O, y, vaw, d) & O.left_in(d, O.mul(w, y))
                & O.lann_sub(d, O.mul(y, v)))

    def c3(O, y, a, d, v, w):
        vaw = O.mul(v, a, w)
        return fixed(O, y, vaw) & O.same_left(O.mul(w, y), d) & O.lann_eq(O.mul(y, v), d)

    def c4(O, y, a, d, v, w):
        vaw = O.mul(v, a, w)
        return (_two_sided(O, y, vaw, d) & O.right_in(d, O.mul(y, v))
                & O.rann_eq(O.mul(w, y), d))

    def c5(O, y, a, d, v, w):
        vaw = O.mul(v, a, w)
        return fixed(O, y, vaw) & O.same_right(O.mul(y, v), d) & O.rann_eq(O.mul(w, y), d)

    def c6(O, y, a, d, v, w):
        return hybrid_definition(O, y, a, d, d, v, w)

    def c7(O, y, a, d, v, w):
        return bc_definition(O, y, a, d, d, v, w)

    return [("(i) definition", along_definition), ("(ii)", c2), ("(iii)", c3),
            ("(iv)", c4), ("(v)", c5), ("(vi) hybrid (d,d)", c6), ("(vii) weighted (d,d)", c7)]


def along_e_eight_way():
    """Eight descriptions of the inverse along a regular ``e``."""
    def c2(O, y, a, e, v, w):
        vaw = O.mul(v, a, w)
        return (_two_sided(O, y, vaw, e) & O.left_in(e, O.mul(w, y))
                & O.lann_sub(e, O.mul(y, v)))

    def c3(O, y, a, e, v, w):
        vaw = O.mul(v, a, w)
        return fixed(O, y, vaw) & O.left_in(e, O.mul(w, y)) & O.lann_eq(O.mul(y, v), e)

    def c4(O, y, a, e, v, w):
        vaw = O.mul(v, a, w)
        return (_two_sided(O, y, vaw, e) & O.right_in(e, O.mul(y, v))
                & O.rann_sub(e, O.mul(w, y)))

    def c5(O, y, a, e, v, w):
        vaw = O.mul(v, a, w)
        return fixed(O, y, vaw) & O.right_in(e, O.mul(y, v)) & O.rann_eq(O.mul(w, y), e)

    def c6(O, y, a, e, v, w):
        return hybrid_definition(O, y, a, e, e, v, w)

    def c7(O, y, a, e, v, w):
        return bc_definition(O, y, a, e, e, v, w)

    def c8(O, y, a, e, v, w):
        return annihilator_definition(O, y, a, e, e, v, w)

    return [("(i) definition", along_definition), ("(ii)", c2), ("(iii)", c3), ("(iv)", c4),
            ("(v)", c5), ("(vi) hybrid (e,e)", c6), ("(vii) weighted (e,e)", c7),
            ("(viii) annihilator (e,e)", c8)]


def along_five_way(O, a, d, v, w):
    """Existence of the inverse along ``d`` through direct sums."""
    return five_way(O, a, d, d, v, w)
