"""Graded modules with raising/lowering operators, the sigma operator, and
the small-quantum-group dictionary.

An AydModule is a Z/p-graded space with x of degree +1 and z of degree -1
subject to x^p = 0, z^p = 0 and, on each degree-i component,

    (xz - xi zx) = (xi^{-2i+1-mu} - 1) id.

Equivalently it is a module over d_a_mu(p, mu) on which g acts by xi^i on
the degree-i piece.  On such a module the sigma operator

    varsigma: m |-> xi^{-i^2 - mu i} (sum_{j<p} xi^{(j-1)j/2}/(j)_xi! z^j x^j) m

is an invertible degree-0 map.  For odd p the substitutions

    E = q^{1-mu} x,   F = z g,   K = q^{mu-1} g^{-1}        (q = xi^{(p-1)/2})

turn the module into a module over the small quantum group uqsl2(p), and
varsigma coincides with q^{m(mu^2-1)} times the action of the ribbon
element v_0 = K u_K u_0 — verified here by two independent routes: a
per-degree scalar identity and an exact matrix identity on the regular
representation (which is faithful, so the operators agree as elements).

stable_analysis records the kernel dimensions of powers of (1 - varsigma)
on the regular representation: the kernel chain of a single operator is
constant from the first repeat on, so the value at k = dim is already
determined once two consecutive powers agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import AlgebraElement, check_guard, d_a_mu, uqsl2
from .exactmat import Mat
from .graded import GradedMap, GradedSpace
from .hopf import AlgebraModule
from .report import check, map_check
from .scalars import (
    balanced_q_factorial,
    format_scalar,
    gauss_sum,
    parse_scalar,
    q_factorial,
    root_of_unity,
)


class AydModule:
    """A Z/p-graded space with operators x (degree +1) and z (degree -1)."""

    def __init__(self, p, mu, space, xop, zop):
        if space.N != p:
            raise ValueError("space must be graded over Z/%d" % p)
        for name, op, shift in (("x", xop, 1), ("z", zop, (p - 1) % p)):
            if op.source != space or op.target != space:
                raise ValueError("%s operator is not an endomorphism" % name)
            if op.mat.data and op.shift != shift:
                raise ValueError(
                    "%s operator has shift %d, expected %d"
                    % (name, op.shift, shift)
                )
        self.p = p
        self.mu = mu % p
        self.space = space
        self.xop = xop
        self.zop = zop
        self.xi = root_of_unity(p)

    @property
    def dim(self):
        return self.space.dim

    def as_module(self):
        """The same data as a module over d_a_mu(p, mu), g acting by xi^i."""
        A = d_a_mu(self.p, self.mu)
        gop = GradedMap.from_diagonal(
            self.space, lambda d, xi=self.xi: xi ** d
        )
        return AlgebraModule(A, self.space, {"z": self.zop, "g": gop,
                                             "x": self.xop})

    def __repr__(self):
        return "AydModule(p=%d, mu=%d, dim %d)" % (self.p, self.mu, self.dim)


def verify_ayd(M):
    """Check the three defining identities as exact matrix equalities."""
    xi = M.xi
    mu = M.mu
    labels = list(M.space.labels)
    zero = GradedMap.zero(M.space, M.space)
    checks = [
        map_check("x_power_vanishes", M.xop ** M.p, zero, labels,
                  details="x^%d = 0" % M.p),
        map_check("z_power_vanishes", M.zop ** M.p, zero, labels,
                  details="z^%d = 0" % M.p),
    ]
    lhs = M.xop @ M.zop - (M.zop @ M.xop).scale(xi)
    rhs = GradedMap.from_diagonal(
        M.space, lambda d: xi ** (-2 * d + 1 - mu) - 1
    )
    checks.append(
        map_check(
            "xz_commutation", lhs, rhs, labels,
            details="(xz - xi zx) = (xi^{-2i+1-mu} - 1) id on degree i",
        )
    )
    return checks


def trivial_ayd_module(p, mu):
    """One-dimensional module in degree 0 with x = z = 0."""
    space = GradedSpace(p, [0])
    return AydModule(
        p, mu, space,
        GradedMap.zero(space, space, 1),
        GradedMap.zero(space, space, p - 1),
    )


def varsigma_H(M, scale=1):
    """The sigma operator of an AydModule (degree 0, invertible).

    scale multiplies the diagonal prefactor, mirroring a rescaling of the
    underlying stable anti-twist.
    """
    xi = M.xi
    series = GradedMap.identity(M.space)
    zs = GradedMap.identity(M.space)
    xs = GradedMap.identity(M.space)
    for j in range(1, M.p):
        zs = zs @ M.zop
        xs = xs @ M.xop
        coeff = xi ** (((j - 1) * j) // 2) * q_factorial(j, xi).inverse()
        series = series + (zs @ xs).scale(coeff)
    prefactor = GradedMap.from_diagonal(
        M.space, lambda d: scale * xi ** (-d * d - M.mu * d)
    )
    return prefactor @ series


def regular_ayd_module(p, mu):
    """The regular representation of d_a_mu(p, mu) as an AydModule.

    The monomial basis is replaced by z^a e_t x^c where e_t is the
    xi^t-eigenvector combination of the g-powers; there g acts diagonally
    with degree (t - a), and left multiplication by x and z is homogeneous
    of degree +1 and -1.  The change of basis is attached as
    .basis_change, the algebra as .algebra.
    """
    A = d_a_mu(p, mu)
    xi = A.xi
    n = A.dim
    unit = Fraction(1, p)
    pdata = {}
    pinv = {}
    degrees = [0] * n
    labels = [""] * n
    for a in range(p):
        for t in range(p):
            for c in range(p):
                col = A.index[(a, t, c)]
                degrees[col] = (t - a) % p
                parts = []
                if a:
                    parts.append("z" if a == 1 else "z^%d" % a)
                parts.append("e_%d" % t)
                if c:
                    parts.append("x" if c == 1 else "x^%d" % c)
                labels[col] = "*".join(parts)
                for b in range(p):
                    row = A.index[(a, b, c)]
                    pdata[(row, col)] = unit * xi ** (-t * b)
                    pinv[(col, row)] = xi ** (t * b)
    P = Mat(n, n, pdata)
    Pinv = Mat(n, n, pinv)
    space = GradedSpace(p, degrees, labels)
    xmat = Pinv * A.left_mult_operator(A.gen("x")) * P
    zmat = Pinv * A.left_mult_operator(A.gen("z")) * P
    M = AydModule(
        p, mu, space,
        GradedMap(space, space, xmat, 1),
        GradedMap(space, space, zmat, p - 1),
    )
    M.basis_change = P
    M.algebra = A
    return M


# ---------------------------------------------------------------------------
# the small quantum group dictionary
# ---------------------------------------------------------------------------


def to_uqsl2(M):
    """View an AydModule as a module over uqsl2(p), p odd.

    E = q^{1-mu} x, F = z g, K = q^{mu-1} g^{-1}, with g acting by xi^i on
    the degree-i component.
    """
    if M.p == 2:
        raise ValueError("needs an odd prime: q = xi^m with m = (p-1)/2")
    U = uqsl2(M.p)
    q = U.q
    xi = M.xi
    mu = M.mu
    gop = GradedMap.from_diagonal(M.space, lambda d: xi ** d)
    ops = {
        "E": M.xop.scale(q ** (1 - mu)),
        "F": M.zop @ gop,
        "K": GradedMap.from_diagonal(
            M.space, lambda d: q ** (mu - 1) * xi ** (-d)
        ),
    }
    return AlgebraModule(U, M.space, ops)


@dataclass
class RibbonData:
    """The ribbon element of uqsl2(p) and its factors."""

    p: int
    m: int
    q: object
    u_K: AlgebraElement
    u_0: AlgebraElement
    v_0: AlgebraElement


def ribbon_element(p):
    """v_0 = K u_K u_0 with the normalized Gauss-sum Casimir factors."""
    U = uqsl2(p)
    q, m = U.q, U.m
    F, K, E = U.gen("F"), U.gen("K"), U.gen("E")
    gs = gauss_sum(p, q, m)
    u_K = U.zero()
    for i in range(p):
        u_K = u_K + q ** (m * i * i) * K ** i
    u_K = gs.inverse() * u_K
    u_0 = U.zero()
    for j in range(p):
        coeff = q ** (((j + 3) * j) // 2) * balanced_q_factorial(j, q).inverse()
        u_0 = u_0 + coeff * (K ** j * F ** j * E ** j)
    v_0 = K * u_K * u_0
    return RibbonData(p=p, m=m, q=q, u_K=u_K, u_0=u_0, v_0=v_0)


def ribbon_centrality_checks(p):
    """v_0 commutes with the generators; u_K is invertible."""
    U = uqsl2(p)
    R = ribbon_element(p)
    checks = []
    for name, el in U.generators():
        lhs = R.v_0 * el
        rhs = el * R.v_0
        ok = lhs == rhs
        checks.append(
            check(
                "v0_commutes_with_%s" % name, ok,
                witnesses=None if ok else [
                    {"generator": name, "difference": repr(lhs - rhs)}
                ],
            )
        )
    L = U.left_mult_operator(R.u_K)
    checks.append(
        check(
            "u_K_invertible",
            L.rank() == U.dim,
            details="rank %d of %d" % (L.rank(), U.dim),
        )
    )
    return checks


def ribbon_prefactor(p, mu):
    """The scalar q^{m(mu^2 - 1)} relating varsigma and the v_0-action."""
    U = uqsl2(p)
    return U.q ** (U.m * ((mu % p) * (mu % p) - 1))


def verify_ribbon_identity(p, mu):
    """Two independent checks that varsigma = q^{m(mu^2-1)} v_0.

    (a) per-degree scalar identity against K u_K with K evaluated at
    q^{mu-1} xi^{-i}; (b) exact matrix identity on the regular
    representation of d_a_mu(p, mu), which is faithful.
    """
    mu %= p
    U = uqsl2(p)
    q = U.q
    xi = U.xi
    R = ribbon_element(p)
    pref = ribbon_prefactor(p, mu)
    checks = []

    ku = U.gen("K") * R.u_K
    bad = []
    for i in range(p):
        kappa = q ** (mu - 1) * xi ** (-i)
        val = 0
        for (f, k, e), cc in ku.terms.items():
            if f or e:
                raise AssertionError("K u_K is not a polynomial in K")
            val = val + cc * kappa ** k
        lhs = xi ** (-i * i - mu * i)
        rhs = pref * val
        if lhs != rhs:
            bad.append({
                "degree": i,
                "sigma_scalar": format_scalar(lhs),
                "scaled_Ku_K_scalar": format_scalar(rhs),
            })
    checks.append(
        check(
            "prefactor_scalar_route", not bad,
            details="xi^{-i^2-mu i} vs q^{m(mu^2-1)} K u_K at "
                    "K = q^{mu-1} xi^{-i}, all i",
            witnesses=bad or None,
        )
    )

    M = regular_ayd_module(p, mu)
    sigma = varsigma_H(M)
    v0_action = to_uqsl2(M).act(R.v_0)
    checks.append(
        map_check(
            "varsigma_equals_scaled_ribbon",
            sigma,
            v0_action.scale(pref),
            list(M.space.labels),
            details="on the regular representation (faithful), "
                    "prefactor %s" % format_scalar(pref),
        )
    )
    return checks


def verify_ribbon_family(p):
    """All mu at once, plus: the prefactor is a function of mu^2 mod p."""
    checks = []
    for mu in range(p):
        for c in verify_ribbon_identity(p, mu):
            c = dict(c)
            c["name"] = "mu=%d: %s" % (mu, c["name"])
            checks.append(c)
    table = {mu: ribbon_prefactor(p, mu) for mu in range(p)}
    bad = []
    for mu in range(p):
        for nu in range(p):
            if (mu * mu - nu * nu) % p == 0 and table[mu] != table[nu]:
                bad.append({
                    "mu": mu, "nu": nu,
                    "prefactors": [format_scalar(table[mu]),
                                   format_scalar(table[nu])],
                })
    checks.append(
        check(
            "prefactor_depends_only_on_mu_squared", not bad,
            details="; ".join(
                "mu=%d: %s" % (mu, format_scalar(table[mu]))
                for mu in range(p)
            ),
            witnesses=bad or None,
        )
    )
    return checks


# ---------------------------------------------------------------------------
# stable-part dimensions
# ---------------------------------------------------------------------------


def stable_analysis(p, mu):
    """Kernel dimensions of (1 - varsigma)^k on the regular representation.

    Returns {"p", "mu", "dim", "kernel_dims": {1: _, 2: _, dim: _},
    "stabilization_power", "chain"}.  The chain of kernels of powers of a
    fixed operator is constant from the first repeat, so the k = dim entry
    equals the stable value reached.
    """
    mu %= p
    check_guard(p ** 3, "stable analysis of the regular representation")
    M = regular_ayd_module(p, mu)
    sigma = varsigma_H(M)
    n = M.dim
    T = Mat.identity(n) - sigma.mat
    chain = []
    Tk = Mat.identity(n)
    power = None
    while True:
        Tk = Tk * T
        nk = Tk.nullity()
        if chain and nk == chain[-1]:
            power = len(chain)
            break
        chain.append(nk)
        if len(chain) > n:
            raise AssertionError("kernel chain failed to stabilize")
    dims = {1: chain[0], 2: chain[1] if len(chain) > 1 else chain[0],
            n: chain[-1]}
    return {
        "p": p,
        "mu": mu,
        "dim": n,
        "kernel_dims": dims,
        "stabilization_power": power,
        "chain": list(chain),
    }


def sweedler_checks(mu):
    """The p = 2 closed forms on the regular representation.

    For mu = 0 (with y = -z): xy + yx = 2 and varsigma = (-1)^i (1 - yx);
    for mu = 1: xz + zx = 0 and varsigma = 1 + zx.
    """
    mu %= 2
    M = regular_ayd_module(2, mu)
    labels = list(M.space.labels)
    x, z = M.xop, M.zop
    anti = x @ z + z @ x
    checks = []
    if mu == 0:
        y = z.scale(-1)
        checks.append(
            map_check(
                "anticommutator_xy_plus_yx",
                x @ y + y @ x,
                GradedMap.identity(M.space).scale(2),
                labels,
                details="with y = -z: xy + yx = 2",
            )
        )
        closed = GradedMap.from_diagonal(
            M.space, lambda d: (-1) ** d
        ) @ (GradedMap.identity(M.space) - y @ x)
        checks.append(
            map_check(
                "sigma_closed_form", varsigma_H(M), closed, labels,
                details="varsigma = (-1)^i (1 - yx)",
            )
        )
    else:
        checks.append(
            map_check(
                "anticommutator_xz_plus_zx",
                anti,
                GradedMap.zero(M.space, M.space),
                labels,
                details="xz + zx = 0",
            )
        )
        closed = GradedMap.identity(M.space) + z @ x
        checks.append(
            map_check(
                "sigma_closed_form", varsigma_H(M), closed, labels,
                details="varsigma = 1 + zx",
            )
        )
    return checks


# ---------------------------------------------------------------------------
# module files
# ---------------------------------------------------------------------------


def _parse_entry(v):
    return parse_scalar(v) if isinstance(v, str) else v


def ayd_module_from_json(data):
    """Build an AydModule from {"p", "mu", "degrees", "x", "z"}.

    x and z are dense row-major matrices; entries are integers or strings
    in the scalar syntax (e.g. "q(3,2) - 1", "1/2").
    """
    p = data["p"]
    mu = data["mu"]
    degrees = list(data["degrees"])
    space = GradedSpace(p, degrees)
    mats = {}
    for key in ("x", "z"):
        rows = data[key]
        if len(rows) != space.dim or any(len(r) != space.dim for r in rows):
            raise ValueError("%r matrix is not %dx%d" % (key, space.dim,
                                                         space.dim))
        mats[key] = Mat.from_rows(
            [[_parse_entry(v) for v in row] for row in rows]
        )
    return AydModule(
        p, mu, space,
        GradedMap(space, space, mats["x"], 1),
        GradedMap(space, space, mats["z"], p - 1),
    )


def ayd_module_to_json(M):
    dense = {}
    for key, op in (("x", M.xop), ("z", M.zop)):
        dense[key] = [
            [format_scalar(op.mat[(r, c)]) for c in range(M.dim)]
            for r in range(M.dim)
        ]
    return {
        "p": M.p,
        "mu": M.mu,
        "degrees": list(M.space.degrees),
        "x": dense["x"],
        "z": dense["z"],
    }
