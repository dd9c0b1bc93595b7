"""Theorem suites.

A suite instantiates one theorem on a stream of instances.  Instances whose
hypotheses fail are skipped (counted, not failed).  On finite rings every
condition is evaluated twice: by brute force on the multiplication tables
(for *all* candidate ``y`` at once) and through the linear-algebra library
at probe points; the suite fails if the theorem fails under either backend
or if the backends disagree.  Over Q only the library backend runs.
"""
from __future__ import annotations

import dataclasses
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import linalg as la
from ..errors import BudgetExceededError, PreconditionError, WBCError
from ..group import group_inverse
from ..ring import Matrix, RingSpec, is_invertible
from ..weighted import (BottDuffinContext, WeightedContext, along_d, annihilator_inverse,
                        bc_exists, bc_inverse, bott_duffin, bott_duffin_necessary,
                        bott_duffin_star, commuting_transport, hybrid_exists, hybrid_inverse,
                        hybrid_via_group, reverse_order, sum_formula)
from . import conditions as cd
from .generate import (InstanceSpace, exhaustive_instances, instance_from_json, instance_to_json,
                       random_instances)
from .ops import LibOps, TableOps
from .tables import tables


class Skip(Exception):
    """Hypotheses of the theorem do not hold for this instance."""


class UnknownSuiteError(WBCError, LookupError):
    pass


class Outcome:
    def __init__(self):
        self.props: list[tuple[str, bool]] = []
        self.notes: list[str] = []

    def check(self, name: str, ok) -> bool:
        ok = bool(ok)
        self.props.append((name, ok))
        return ok

    def note(self, name: str):
        self.notes.append(name)

    @property
    def failed(self) -> list[str]:
        return [n for n, ok in self.props if not ok]


@dataclass
class Env:
    ring: RingSpec
    k: int
    lib: LibOps
    tab: TableOps | None

    @classmethod
    def make(cls, ring: RingSpec, k: int) -> "Env":
        tab = None
        if ring.is_finite:
            try:
                tab = TableOps(tables(ring, k))
            except BudgetExceededError:
                tab = None
        return cls(ring, k, LibOps(ring, k), tab)

    @property
    def zero(self) -> Matrix:
        return self.lib.zero

    @property
    def one(self) -> Matrix:
        return self.lib.one


@dataclass
class Suite:
    name: str
    statement: str
    slots: tuple
    vary: tuple
    fixed: dict
    check: Callable
    random_constraints: tuple = ()
    exhaustive_filter: tuple = ()


SUITES: dict[str, Suite] = {}
CORE_SUITES = ("thm-8way", "thm-5way", "hybrid-decomp", "reverse-order", "sum-formula",
               "along-d-7way", "bott-duffin-4way", "prop-annihilators", "idempotent-ann",
               "regularity", "rann-equalities", "group-iff", "commuting-transport",
               "along-e-8way")


def suite(name, statement, slots, vary, fixed=None, random_constraints=(), exhaustive_filter=()):
    def deco(fn):
        SUITES[name] = Suite(name, statement, tuple(slots), tuple(vary), dict(fixed or {}), fn,
                             tuple(random_constraints), tuple(exhaustive_filter))
        return fn
    return deco


# ----------------------------------------------------------------------------
# shared machinery


def _lift(O, xs):
    return [None if x is None else O.lift(x) for x in xs]


def sweep(env: Env, out: Outcome, label: str, conds, args, probes, extra_lifts=None):
    """Check that all conditions ``(name, fn(O, y, *args))`` agree.

    With tables: on every element ``y``, plus backend agreement at the probes.
    Without: at the probes only.  Returns the table masks (or ``None``).
    ``extra_lifts`` builds backend-specific condition lists (for conditions
    that close over context-dependent elements).
    """
    masks = None
    if env.tab is not None:
        O = env.tab
        targs = _lift(O, args)
        tconds = extra_lifts(O) if extra_lifts else conds
        N = O.T.N
        masks = [np.broadcast_to(np.asarray(fn(O, O.T.all, *targs)), (N,)) for _, fn in tconds]
        for (name, _), m in zip(tconds[1:], masks[1:]):
            out.check(f"{label}: {name} ⇔ {tconds[0][0]} for every y", np.array_equal(m, masks[0]))
    lconds = extra_lifts(env.lib) if extra_lifts else conds
    for p in probes:
        vals = [bool(fn(env.lib, p, *args)) for _, fn in lconds]
        if masks is not None:
            i = env.tab.lift(p)
            out.check(f"{label}: library matches tables at probe",
                      all(v == bool(m[i]) for v, m in zip(vals, masks)))
        else:
            out.check(f"{label}: conditions agree at probe", len(set(vals)) == 1)
    return masks


def oracle_set(env: Env, mask) -> set:
    return {env.tab.lower(i) for i in np.flatnonzero(mask)}


def check_singleton(env: Env, out: Outcome, label: str, mask, value: Matrix | None):
    if mask is None:
        return
    expected = set() if value is None else {value}
    out.check(f"{label}: brute-force solutions = computed", oracle_set(env, mask) == expected)


def _weights_invertible(v, w) -> bool:
    return is_invertible(v) or is_invertible(w)


def _probes(env: Env, value: Matrix | None, *more: Matrix) -> list:
    ps = [value if value is not None else env.zero]
    if env.tab is None:
        ps += [m for m in more if m not in ps]
    return ps


# ----------------------------------------------------------------------------
# the fourteen theorem suites


@suite("thm-8way", "eight equivalent descriptions of the weighted (b,c)-inverse",
       "abcvw", "abc", {"v": "1", "w": "1"})
def _thm8(env: Env, inst, out: Outcome):
    a, b, c, v, w = (inst[s] for s in "abcvw")
    rep = bc_inverse(WeightedContext(a, b, c, v, w), scan=False)
    gb, gc = la.inner_inverse(b), la.inner_inverse(c)
    gb, gc = (gb["g"] if gb else None), (gc["g"] if gc else None)

    def conds(O):
        return cd.eight_way(*_lift(O, [gb, gc]))

    masks = sweep(env, out, "8-way", None, (a, b, c, v, w),
                  _probes(env, rep.value, env.one, b, c), extra_lifts=conds)
    vii = cd.eight_way_existence(env.lib, gb, gc, a, b, c, v, w)
    out.check("(vii) ⇔ existence", vii == rep.exists)
    if gb is not None and gc is not None:
        bb, cc = b @ gb, gc @ c
        x = cc @ v @ a @ w @ bb
        t, s = la.solve_left(x, bb), la.solve_right(x, cc)
        viii = t is not None and s is not None
        if viii:
            out.check("(viii) witnesses replay", t["x"] @ x == bb and x @ s["x"] == cc)
        out.check("(viii) ⇔ existence", viii == rep.exists)
    if masks is not None:
        tab = env.tab
        targs = _lift(tab, [gb, gc, a, b, c, v, w])
        out.check("(vii) tables = library", cd.eight_way_existence(tab, *targs) == vii)
        out.check("existence ⇔ definition solvable", bool(masks[0].any()) == rep.exists)
        check_singleton(env, out, "(i)", masks[0], rep.value)


@suite("thm-5way", "existence through R = Rcvaw ⊕ lann(b) and R = vawbR ⊕ rann(c)",
       "abcvw", "abc", {"v": "1", "w": "1"})
def _thm5(env: Env, inst, out: Outcome):
    args = [inst[s] for s in "abcvw"]
    exists = bc_exists(WeightedContext(*args))[0]
    lib = cd.five_way(env.lib, *args)
    for name, ok in lib:
        out.check(f"{name} ⇔ existence (library)", ok == exists)
    if env.tab is not None:
        targs = _lift(env.tab, args)
        tab = cd.five_way(env.tab, *targs)
        for (name, ok), (_, lok) in zip(tab, lib):
            out.check(f"{name}: tables = library", ok == lok)
        mask = cd.bc_definition(env.tab, env.tab.T.all, *targs)
        out.check("existence: library = brute force", bool(mask.any()) == exists)


@suite("hybrid-decomp", "hybrid inverse exists iff R = vawbR ⊕ rann(c) and rann(vaw) ∩ bR = 0",
       "abcvw", "abc", {"v": "1", "w": "1"}, random_constraints=("v-invertible",))
def _hybrid_decomp(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    if not _weights_invertible(v, w):
        raise Skip("v and w singular")
    ctx = WeightedContext(*args)
    rep = hybrid_inverse(ctx, scan=False)
    split = cd.hybrid_split(env.lib, *args)
    out.check("existence ⇔ direct sum (library)", split == rep.exists)
    conds = [("(i) definition", cd.hybrid_definition), ("(ii) second form", cd.hybrid_second_form)]
    masks = sweep(env, out, "hybrid forms", conds, args, _probes(env, rep.value, env.one, b))
    if masks is not None:
        tab = env.tab
        targs = _lift(tab, args)
        out.check("direct sum: tables = library", cd.hybrid_split(tab, *targs) == split)
        out.check("existence: library = brute force", bool(masks[0].any()) == rep.exists)
        check_singleton(env, out, "hybrid", masks[0], rep.value)
        if rep.exists:
            ta, tb, tc, tv, tw = targs
            x = tab.mul(tc, tv, ta, tw, tb)
            ts = np.flatnonzero(tab.T.mul[x] == tc)
            out.check("every bt with c = cvawbt is the hybrid",
                      bool(np.all(tab.T.mul[tb, ts] == tab.lift(rep.value))))


@suite("reverse-order", "(swvt) inverse is t-inverse times s-inverse under bvtw = vtwb, cvsw = vswc",
       "stbcvw", "stb", {"c": "b", "v": "1", "w": "1"},
       random_constraints=("central-bc", "v-invertible"))
def _reverse(env: Env, inst, out: Outcome):
    s, t, b, c, v, w = (inst[x] for x in "stbcvw")
    if not (b @ v @ t @ w == v @ t @ w @ b and c @ v @ s @ w == v @ s @ w @ c):
        raise Skip("commutation hypotheses fail")
    prod = s @ w @ v @ t
    applied = False
    # plain weighted (b,c) form: no invertibility hypothesis
    ys, yt = (bc_inverse(WeightedContext(x, b, c, v, w), scan=False) for x in (s, t))
    if ys.exists and yt.exists:
        applied = True
        y = yt.value @ ys.value
        ref = bc_inverse(WeightedContext(prod, b, c, v, w), scan=False)
        out.check("bc form: inverse of swvt = t-inverse s-inverse", ref.exists and ref.value == y)
        if env.tab is not None:
            mask = cd.bc_definition(env.tab, env.tab.T.all, *_lift(env.tab, [prod, b, c, v, w]))
            check_singleton(env, out, "bc form", mask, y)
    if _weights_invertible(v, w):
        ctxs = [WeightedContext(x, b, c, v, w) for x in (s, t)]
        ra, rb = (annihilator_inverse(cx, scan=False) for cx in ctxs)
        if ra.exists and rb.exists:
            applied = True
            rep = reverse_order(s, t, b, c, v, w)
            for name, ok in rep.checks:
                out.check(f"annihilator form: {name}", ok)
            lit = annihilator_inverse(WeightedContext(s @ t, b, c, v, w), scan=False)
            if lit.exists and lit.value == rep.value:
                out.note("unweighted product st also matches")
            else:
                out.note("unweighted product st differs")
            if env.tab is not None:
                T = env.tab
                for label, x, val in (("s", s, ra.value), ("t", t, rb.value), ("swvt", prod, rep.value)):
                    mask = cd.annihilator_definition(T, T.T.all, *_lift(T, [x, b, c, v, w]))
                    check_singleton(env, out, f"annihilator {label}", mask, val)
    if not applied:
        raise Skip("inverses of s and t do not both exist")


@suite("sum-formula", "y1 + y2 = y1 v(a1+a2) w y2 = y2 v(a1+a2) w y1",
       ("a1", "a2", "b", "c", "v", "w"), ("a1", "a2", "b"), {"c": "b", "v": "1", "w": "1"},
       random_constraints=("v-invertible", "w-invertible"))
def _sum(env: Env, inst, out: Outcome):
    a1, a2, b, c, v, w = (inst[x] for x in ("a1", "a2", "b", "c", "v", "w"))
    if not (is_invertible(v) and is_invertible(w)):
        raise Skip("v or w singular")
    r1, r2 = (annihilator_inverse(WeightedContext(x, b, c, v, w), scan=False) for x in (a1, a2))
    if not (r1.exists and r2.exists):
        raise Skip("an annihilator inverse is missing")
    rep = sum_formula(a1, a2, b, c, v, w)
    for name, ok in rep.checks:
        out.check(name, ok)
    if env.tab is not None:
        T = env.tab
        for label, x, val in (("a1", a1, r1.value), ("a2", a2, r2.value)):
            mask = cd.annihilator_definition(T, T.T.all, *_lift(T, [x, b, c, v, w]))
            check_singleton(env, out, label, mask, val)


@suite("along-d-7way", "seven equivalent descriptions of the weighted inverse along d",
       "advw", "adv", {"w": "1"}, random_constraints=("v-invertible",))
def _along7(env: Env, inst, out: Outcome):
    a, d, v, w = args = [inst[x] for x in "advw"]
    T = env.tab
    vawd = v @ a @ w @ d
    # group-invertibility corollary (stated without an invertibility hypothesis)
    if T is not None:
        mask = cd.along_definition(T, T.T.all, *_lift(T, args))
        crit = bool(T.group_invertible(T.lift(vawd))) and bool(T.rann_eq(T.lift(vawd), T.lift(d)))
        out.check("exists ⇔ vawd group invertible, rann(vawd)=rann(d) (tables)", bool(mask.any()) == crit)
    if not _weights_invertible(v, w):
        if T is None:
            raise Skip("v and w singular")
        return
    rep = along_d(a, d, v, w, scan=False)
    crit = env.lib.group_invertible(vawd) and env.lib.rann_eq(vawd, d)
    out.check("exists ⇔ vawd group invertible, rann(vawd)=rann(d)", crit == rep.exists)
    for name, ok in cd.along_five_way(env.lib, a, d, v, w):
        out.check(f"decomposition {name} ⇔ existence", ok == rep.exists)
    masks = sweep(env, out, "7-way", cd.along_seven_way(), args,
                  _probes(env, rep.value, env.one, d))
    if masks is not None:
        check_singleton(env, out, "along d", masks[0], rep.value)


@suite("bott-duffin-4way", "four equivalent invertibility conditions for an idempotent pair",
       "avwef", "aef", {"v": "1", "w": "1"},
       random_constraints=("idempotent-pair",), exhaustive_filter=("idempotent-pair",))
def _bd4(env: Env, inst, out: Outcome):
    a, v, w, e, f = (inst[x] for x in "avwef")
    try:
        bd = BottDuffinContext(a, v, w, e, f)
    except PreconditionError:
        raise Skip("e or f not idempotent")
    rep = bott_duffin(bd, scan=False)
    nec, cert = bott_duffin_necessary(bd)
    g = bd.fvawe
    lib_i = env.lib.two_sided_in(e, e, g) and env.lib.two_sided_in(g, f, f)
    out.check("(i) library = necessary-condition test", lib_i == nec)
    if rep.exists:
        out.check("inverse exists ⇒ (i)", nec)
    if nec:
        out.check("m, n witnesses replay", cert.replay())
    T = env.tab
    if T is None:
        return
    te, tf, tg = T.lift(e), T.lift(f), T.lift(g)
    M = T.T
    one = T.one
    cond_i = bool(T.two_sided_in(te, te, tg) & T.two_sided_in(tg, tf, tf))
    p = T.sub(M.add[M.mul[M.all, tg], one], te)
    pinv = M.inverses[p]
    p_ok = pinv >= 0
    cond_ii = bool(np.any(M.right_ideals[M.mul[tg, pinv[p_ok]], tf]))
    q = T.sub(M.add[M.mul[tg, M.all], one], tf)
    qinv = M.inverses[q]
    q_ok = qinv >= 0
    cond_iii = bool(np.any(M.left_ideals[M.mul[qinv[q_ok], tg], te]))
    cond_iv = bool(p_ok.any() and q_ok.any())
    out.check("(i) tables = library", cond_i == lib_i)
    for name, ok in (("(ii)", cond_ii), ("(iii)", cond_iii), ("(iv)", cond_iv)):
        out.check(f"{name} ⇔ (i)", ok == cond_i)
    mask = cd.bott_duffin_definition(T, M.all, *_lift(T, [a, v, w, e, f]))
    check_singleton(env, out, "bott-duffin", mask, rep.value)


@suite("prop-annihilators", "ideal inclusions versus annihilator inclusions",
       "dyx", "dyx", {})
def _prop_ann(env: Env, inst, out: Outcome):
    d, y, x = (inst[s] for s in "dyx")

    def facts(O, d, y, x):
        xy, yx = O.mul(x, y), O.mul(y, x)
        return {"Rxy⊆Rd": O.left_in(d, xy), "Rxy=Rd": O.same_left(xy, d),
                "rann(d)⊆rann(xy)": O.rann_sub(d, xy), "rann(xy)=rann(d)": O.rann_eq(xy, d),
                "yxR⊆dR": O.right_in(d, yx), "yxR=dR": O.same_right(yx, d),
                "lann(d)⊆lann(yx)": O.lann_sub(d, yx), "lann(yx)=lann(d)": O.lann_eq(yx, d),
                "d regular": O.regular(d)}

    backends = [("library", env.lib, (d, y, x))]
    if env.tab is not None:
        backends.append(("tables", env.tab, tuple(_lift(env.tab, [d, y, x]))))
    results = {}
    for label, O, args in backends:
        fs = {k: bool(val) for k, val in facts(O, *args).items()}
        results[label] = fs
    fs = results["library"]
    rules = [("(i) Rwy⊆Rd ⇒ rann(d)⊆rann(wy)", fs["Rxy⊆Rd"], "rann(d)⊆rann(xy)"),
             ("(i) Rwy=Rd ⇒ rann(wy)=rann(d)", fs["Rxy=Rd"], "rann(xy)=rann(d)"),
             ("(ii) yvR⊆dR ⇒ lann(d)⊆lann(yv)", fs["yxR⊆dR"], "lann(d)⊆lann(yx)"),
             ("(ii) yvR=dR ⇒ lann(yv)=lann(d)", fs["yxR=dR"], "lann(yx)=lann(d)"),
             ("(iii) rann(d)⊆rann(wy), d regular ⇒ Rwy⊆Rd",
              fs["rann(d)⊆rann(xy)"] and fs["d regular"], "Rxy⊆Rd"),
             ("(iv) lann(d)⊆lann(yv), d regular ⇒ yvR⊆dR",
              fs["lann(d)⊆lann(yx)"] and fs["d regular"], "yxR⊆dR")]
    if not any(h for _, h, _ in rules):
        raise Skip("no hypothesis holds")
    for label, fsb in results.items():
        for name, hyp, concl in rules:
            if hyp:
                out.check(f"{name} ({label})", fsb[concl])
    if "tables" in results:
        out.check("tables = library", results["tables"] == results["library"])


@suite("idempotent-ann", "rann(e) = (1-e)R and lann(e) = R(1-e) for idempotent e",
       "e", "e", {}, random_constraints=("idempotent",))
def _idem(env: Env, inst, out: Outcome):
    e = inst["e"]
    if e @ e != e:
        raise Skip("not idempotent")
    u = env.one - e
    out.check("rann(e) = (1-e)R (library)", la.rann(e).same_span(la.right_ideal(u)))
    out.check("lann(e) = R(1-e) (library)", la.lann(e).same_span(la.left_ideal(u)))
    if env.tab is not None:
        T = env.tab
        te, tu = T.lift(e), T.lift(u)
        out.check("rann(e) = (1-e)R (tables)", np.array_equal(T._rann[te], T.T.right_ideals[tu]))
        out.check("lann(e) = R(1-e) (tables)", np.array_equal(T._lann[te], T.T.left_ideals[tu]))


@suite("regularity", "existence forces b and c regular; hybrid-to-full existence via regularity",
       "abcvw", "abc", {"v": "1", "w": "1"}, random_constraints=("v-invertible",))
def _regularity(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    ctx = WeightedContext(*args)
    exists = bc_exists(ctx)[0]
    hyb = _weights_invertible(v, w) and hybrid_exists(ctx)[0]
    if not (exists or hyb):
        raise Skip("neither inverse exists")
    T = env.tab
    targs = _lift(T, args) if T is not None else None
    if exists:
        out.check("b regular", la.inner_inverse(b) is not None)
        out.check("c regular", la.inner_inverse(c) is not None)
        if T is not None:
            out.check("b, c regular (tables)", bool(T.regular(targs[1]) & T.regular(targs[2])))
    if hyb:
        mid = c @ v @ a @ w @ b
        out.check("hybrid: existence ⇔ cvawb regular", exists == la.is_regular(mid))
        out.check("hybrid: existence ⇔ c regular", exists == la.is_regular(c))
        if T is not None:
            tm = T.mul(targs[2], T.mul(targs[3], targs[0], targs[4]), targs[1])
            bf = bool(cd.bc_definition(T, T.T.all, *targs).any())
            out.check("hybrid: brute-force existence ⇔ cvawb regular", bf == bool(T.regular(tm)))
            out.check("hybrid: brute-force existence ⇔ c regular", bf == bool(T.regular(targs[2])))


@suite("rann-equalities", "hybrid existence gives rann(vawb) = rann(b), and rann(vawbs) = rann(vawb)",
       "abcvw", "abc", {"v": "1", "w": "1"}, random_constraints=("v-invertible", "rann-equal(b,c)"))
def _rann_eq(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    if not _weights_invertible(v, w) or not hybrid_exists(WeightedContext(*args))[0]:
        raise Skip("no hybrid inverse")
    x = v @ a @ w @ b
    out.check("(i) rann(vawb)=rann(b)", la.ann_equal(x, b))
    T = env.tab
    if T is not None:
        tx, tb = T.lift(x), T.lift(b)
        out.check("(i) tables", bool(T.rann_eq(tx, tb)))
    if la.ann_equal(b, c):
        cert = la.solve_right(x @ x, x)
        if cert is None:
            out.note("no s with vawb = (vawb)^2 s")
        else:
            out.check("(ii) rann(vawbs)=rann(vawb)", la.ann_equal(x @ cert["x"], x))
        if T is not None:
            ss = np.flatnonzero(T.T.mul[T.T.mul[tx, tx]] == tx)
            out.check("(ii) for every such s (tables)", bool(np.all(T.rann_eq(T.T.mul[tx, ss], tx))))


@suite("group-iff", "under rann(vawb)=rann(b)=rann(c): hybrid exists iff vawb group invertible; "
       "and the converse corollary", "abcvw", "abc", {"v": "1", "w": "1"},
       random_constraints=("v-invertible",))
def _group_iff(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    if not _weights_invertible(v, w):
        raise Skip("v and w singular")
    ctx = WeightedContext(*args)
    x = v @ a @ w @ b
    equal3 = la.ann_equal(x, b) and la.ann_equal(b, c)
    gi = env.lib.group_invertible(x)
    hyb = hybrid_inverse(ctx, scan=False)
    if not (equal3 or hyb.exists):
        raise Skip("neither hypothesis holds")
    T = env.tab
    if T is not None:
        tx, tb, tc = _lift(T, [x, b, c])
        out.check("rann equalities: tables = library",
                  bool(T.rann_eq(tx, tb) & T.rann_eq(tb, tc)) == equal3)
        out.check("group invertibility: tables = library", bool(T.group_invertible(tx)) == gi)
        bf = bool(cd.hybrid_definition(T, T.T.all, *_lift(T, args)).any())
        out.check("hybrid existence: tables = library", bf == hyb.exists)
    if equal3:
        out.check("theorem: hybrid exists ⇔ vawb group invertible", hyb.exists == gi)
        via = hybrid_via_group(ctx)
        out.check("theorem: b(vawb)# route agrees", via.exists == hyb.exists
                  and (not via.exists or via.value == hyb.value))
    if hyb.exists:
        if equal3:
            out.check("corollary: rann equalities ⇒ vawb group invertible", gi)
        if gi:
            out.check("corollary: vawb group invertible ⇒ rann equalities", equal3)


@suite("commuting-transport", "r y1 = y2 r when r intertwines the two contexts",
       ("r", "a1", "a2", "b1", "b2", "c1", "c2", "v", "w"), ("r", "a1", "b1"),
       {"a2": "a1", "b2": "b1", "c1": "b1", "c2": "b1", "v": "1", "w": "1"},
       random_constraints=("intertwined",))
def _transport(env: Env, inst, out: Outcome):
    names = ("a1", "a2", "b1", "b2", "c1", "c2", "v", "w", "r")
    vals = [inst[n] for n in names]
    try:
        rep = commuting_transport(*vals)
    except PreconditionError as exc:
        raise Skip(str(exc))
    for name, ok in rep.checks:
        out.check(name, ok)
    T = env.tab
    if T is None:
        return
    a1, a2, b1, b2, c1, c2, v, w, r = _lift(T, vals)
    ys = []
    for a_, b_, c_ in ((a1, b1, c1), (a2, b2, c2)):
        m = np.flatnonzero(cd.bc_definition(T, T.T.all, a_, b_, c_, v, w))
        ys.append(m)
    if len(ys[0]) == 1 and len(ys[1]) == 1:
        out.check("bc: ry1 = y2r (tables)", T.mul(r, ys[0][0]) == T.mul(ys[1][0], r))
    if "bc_y1" in rep.values:
        out.check("bc values: tables = library",
                  len(ys[0]) == 1 and T.lower(ys[0][0]) == rep.values["bc_y1"])


@suite("along-e-8way", "eight equivalent descriptions of the inverse along a regular e",
       "aevw", "aev", {"w": "1"}, random_constraints=("v-invertible",))
def _along_e(env: Env, inst, out: Outcome):
    a, e, v, w = args = [inst[x] for x in "aevw"]
    if not _weights_invertible(v, w):
        raise Skip("v and w singular")
    if not la.is_regular(e):
        raise Skip("e not regular")
    rep = along_d(a, e, v, w, scan=False)
    ann = annihilator_inverse(WeightedContext(a, e, e, v, w), scan=False)
    out.check("annihilator (e,e)-inverse = inverse along e",
              ann.exists == rep.exists and (not ann.exists or ann.value == rep.value))
    masks = sweep(env, out, "8-way", cd.along_e_eight_way(), args,
                  _probes(env, rep.value, env.one, e))
    if masks is not None:
        check_singleton(env, out, "along e", masks[0], rep.value)


# ----------------------------------------------------------------------------
# supplementary suites (not part of the fourteen)


@suite("hybrid-remark", "vawb group invertible ⇒ b(vawb)# is the hybrid inverse",
       "abcvw", "abc", {"v": "1", "w": "1"}, random_constraints=("v-invertible",))
def _remark(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    if not _weights_invertible(v, w):
        raise Skip("v and w singular")
    g = group_inverse(v @ a @ w @ b)
    if g is None:
        raise Skip("vawb not group invertible")
    rep = hybrid_inverse(WeightedContext(*args), scan=False)
    out.check("hybrid inverse exists", rep.exists)
    out.check("b(vawb)# is the hybrid inverse", rep.exists and rep.value == b @ g.value)


@suite("bc-group", "the inverse equals s(vaws)# = (svaw)# s whenever sR = bR, rann(s) = rann(c)",
       "abcvw", "abc", {"v": "1", "w": "1"}, random_constraints=("rann-equal(b,c)",))
def _bc_group(env: Env, inst, out: Outcome):
    a, b, c, v, w = args = [inst[s] for s in "abcvw"]
    rep = bc_inverse(WeightedContext(*args), scan=False)
    if not rep.exists:
        raise Skip("no inverse")
    vaw = v @ a @ w
    if la.ann_equal(b, c):
        gs = [group_inverse(vaw @ b), group_inverse(b @ vaw)]
        out.check("s=b: vaws, svaw group invertible", all(gs))
        if all(gs):
            out.check("s=b: s(vaws)# = (svaw)# s = y",
                      b @ gs[0].value == rep.value == gs[1].value @ b)
    T = env.tab
    if T is None:
        if not la.ann_equal(b, c):
            raise Skip("no s available without tables")
        return
    tb, tc, tvaw, ty = _lift(T, [b, c, vaw, rep.value])
    M = T.T
    ss = np.flatnonzero(T.same_right(M.all, tb) & T.rann_eq(M.all, tc))
    good = True
    for s_ in ss:
        g1, g2 = M.group_inverses(M.mul[tvaw, s_]), M.group_inverses(M.mul[s_, tvaw])
        good &= len(g1) == 1 and len(g2) == 1 and M.mul[s_, g1[0]] == ty == M.mul[g2[0], s_]
    out.check("every admissible s gives s(vaws)# = (svaw)# s = y (tables)", good)
    if not len(ss):
        out.note("no admissible s")


@suite("implication-chain", "weighted ⇒ annihilator (equal) ⇒ hybrid (equal)",
       "abcvw", "abc", {"v": "1", "w": "1"})
def _chain(env: Env, inst, out: Outcome):
    args = [inst[s] for s in "abcvw"]
    ctx = WeightedContext(*args)
    rep = bc_inverse(ctx, scan=False)
    if not rep.exists:
        raise Skip("no inverse")
    y = rep.value
    out.check("y satisfies the annihilator definition", cd.annihilator_definition(env.lib, y, *args))
    out.check("y satisfies the hybrid definition", cd.hybrid_definition(env.lib, y, *args))
    if _weights_invertible(args[3], args[4]):
        ann = annihilator_inverse(ctx, scan=False)
        out.check("annihilator inverse = y", ann.exists and ann.value == y)
        hyb = hybrid_inverse(ctx, scan=False)
        out.check("hybrid inverse = y", hyb.exists and hyb.value == y)
    T = env.tab
    if T is not None:
        targs = _lift(T, args)
        for label, fn in (("annihilator", cd.annihilator_definition), ("hybrid", cd.hybrid_definition)):
            check_singleton(env, out, label, fn(T, T.T.all, *targs), y)


@suite("bott-duffin-star", "symmetric idempotents: p = (fvawe)*fvawe + 1 - e invertible, etc.",
       "avwef", "aef", {"v": "1", "w": "1"},
       random_constraints=("symmetric-idempotent-pair",),
       exhaustive_filter=("symmetric-idempotent-pair",))
def _bd_star(env: Env, inst, out: Outcome):
    a, v, w, e, f = (inst[x] for x in "avwef")
    bd = BottDuffinContext(a, v, w, e, f)
    if not bott_duffin(bd, scan=False).exists:
        raise Skip("no Bott-Duffin inverse")
    for name, ok in bott_duffin_star(bd).checks:
        out.check(name, ok)


# ----------------------------------------------------------------------------
# running


@dataclass
class SuiteResult:
    suite: str
    space: dict
    tested: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "space": self.space, "passed": self.passed,
                "tested": self.tested, "skipped": self.skipped,
                "failure_count": len(self.failures), "failures": self.failures,
                "notes": self.notes, "elapsed": round(self.elapsed, 3)}


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def instances_for(s: Suite, space: InstanceSpace):
    if space.mode == "exhaustive":
        return exhaustive_instances(space, s.vary, s.fixed,
                                    s.exhaustive_filter + tuple(space.constraints))
    return random_instances(space, s.slots, s.random_constraints + tuple(space.constraints))


def evaluate(s: Suite, env: Env, inst: dict) -> Outcome | None:
    """Run one instance; ``None`` means skipped.  Exceptions become failures."""
    out = Outcome()
    try:
        s.check(env, inst, out)
    except Skip:
        return None
    except Exception as exc:  # a library error on a theorem instance is a finding
        out.check(f"raised {type(exc).__name__}: {exc}", False)
    return out


def _run_chunk(name: str, ring_json: dict, k: int, items):
    s = get_suite(name)
    ring = RingSpec.from_json(ring_json)
    env = Env.make(ring, k)
    res = []
    for idx, obj in items:
        _, _, inst = instance_from_json(obj)
        o = evaluate(s, env, inst)
        res.append((idx, None if o is None else (o.failed, o.notes)))
    return res


def run_suite(name: str, space: InstanceSpace, jobs: int = 1,
              min_tested: int | None = None, max_draws: int | None = None) -> SuiteResult:
    """Run suite ``name`` over ``space``; deterministic for a given space.

    In random mode ``min_tested`` keeps reading the same seeded stream past
    ``space.count`` until that many instances were tested (not skipped), or
    ``max_draws`` (default ``50 * max(count, min_tested)``) instances were drawn.
    """
    s = get_suite(name)
    if min_tested and space.mode == "random":
        cap = max_draws or 50 * max(space.count, min_tested)
        stream_space = dataclasses.replace(space, count=cap)
        jobs = 1
    else:
        stream_space, min_tested = space, None
    t0 = time.perf_counter()
    result = SuiteResult(name, space.to_json())
    notes = Counter()
    ring, k = space.ring, space.k

    def record(idx, inst_json, outcome):
        if outcome is None:
            result.skipped += 1
            return
        failed, ns = outcome
        result.tested += 1
        notes.update(ns)
        for prop in failed:
            result.failures.append({"suite": name, "index": idx, "instance": inst_json, "property": prop})

    if jobs <= 1:
        env = Env.make(ring, k)
        for idx, inst in enumerate(instances_for(s, stream_space)):
            if min_tested and idx >= space.count and result.tested >= min_tested:
                break
            o = evaluate(s, env, inst)
            record(idx, None if o is None or not o.failed else instance_to_json(ring, k, inst),
                   None if o is None else (o.failed, o.notes))
    else:
        items = [(i, instance_to_json(ring, k, inst)) for i, inst in enumerate(instances_for(s, space))]
        chunks = [items[j::jobs] for j in range(jobs)]
        merged = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, [name] * jobs, [ring.to_json()] * jobs,
                                 [k] * jobs, chunks):
                merged.extend(part)
        lookup = dict(items)
        for idx, o in sorted(merged, key=lambda t: t[0]):
            record(idx, lookup[idx] if o is not None and o[0] else None, o)
    if min_tested:
        result.space["min_tested"] = min_tested
    result.notes = dict(sorted(notes.items()))
    result.elapsed = time.perf_counter() - t0
    return result


def replay(obj: dict) -> dict:
    """Re-run one instance.  ``obj`` is a failure record or ``{"suite":..., "instance":...}``."""
    name = obj["suite"]
    s = get_suite(name)
    ring, k, inst = instance_from_json(obj["instance"])
    missing = [x for x in s.slots if x not in inst]
    if missing:
        raise ValueError(f"instance lacks slots {missing}")
    o = evaluate(s, Env.make(ring, k), inst)
    if o is None:
        return {"suite": name, "status": "skipped", "properties": []}
    return {"suite": name, "status": "fail" if o.failed else "pass",
            "properties": [[n, ok] for n, ok in o.props], "notes": o.notes}
