"""Hopf algebras internal to the braided category of Z/N-graded vector spaces.

The braided tensor square A (x)^tau A of a graded algebra carries the product

    (a (x) b) * (c (x) d)  =  chi(deg b, deg c) * (ac (x) bd),

and a Hopf structure on A is a coproduct Delta: A -> A (x)^tau A, a counit
eps: A -> k and an antipode S: A -> A.  Here the structure maps are stored
as exact matrices (GradedMap), built from their values on generators:
Delta and eps extend multiplicatively, S anti-multiplicatively with the
braiding scalar,

    S(ab) = chi(deg a, deg b) * S(b) * S(a).

Whether the extensions actually define a bialgebra is *not* assumed; it is
checked by verify_bialgebra as the matrix identity

    Delta . m  =  (m (x) m) . (id (x) tau (x) id) . (Delta (x) Delta),

together with unit/counit compatibility, coassociativity and the counit
law.  verify_antipode checks the antipode axiom and the (anti)morphism
properties, and reports the square of the antipode.

The second half of the module deals with modules over these algebras:
generator-action data (AlgebraModule), the braided tensor product of
modules, and the transmutation dictionary between modules over the Taft
algebra and graded modules over the anyonic line.
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import (
    AlgebraElement,
    StructureConstantAlgebra,
    anyonic_line,
    taft,
)
from .exactmat import Mat, from_cols
from .graded import (
    Bicharacter,
    GradedMap,
    GradedSpace,
    braiding,
    tensor,
    tensor_map,
)
from .report import check, map_check
from .scalars import q_binomial


# ---------------------------------------------------------------------------
# braided tensor square
# ---------------------------------------------------------------------------


def braided_tensor_algebra(A, B, chi, inverse=False):
    """The algebra A (x)^tau B on pair monomials.

    Crossing scalar chi(deg b, deg c); with inverse=True the inverse
    braiding is used instead (the variant A (x)^{tau^-1} B).
    """
    if A.N != B.N:
        raise ValueError("grading groups differ")
    if chi.N != A.N:
        raise ValueError("bicharacter lives on the wrong group")
    basis = [(ma, mb) for ma in A.basis for mb in B.basis]
    degrees = [
        (A.mono_degree(ma) + B.mono_degree(mb)) % A.N for (ma, mb) in basis
    ]
    labels = [
        "%s(x)%s" % (A.mono_label(ma), B.mono_label(mb)) for (ma, mb) in basis
    ]
    cross = chi.chi_inv if inverse else chi.chi

    def rule(left, right):
        ma, mb = left
        mc, md = right
        s = cross(B.mono_degree(mb), A.mono_degree(mc))
        out = {}
        for m1, c1 in A.pair_product(ma, mc).items():
            for m2, c2 in B.pair_product(mb, md).items():
                v = out.get((m1, m2), 0) + s * c1 * c2
                if v:
                    out[(m1, m2)] = v
                else:
                    out.pop((m1, m2), None)
        return out

    gens = [
        ("%s(x)1" % n, (next(iter(el.terms)), B.unit_mono))
        for n, el in A.generators()
    ] + [
        ("1(x)%s" % n, (A.unit_mono, next(iter(el.terms))))
        for n, el in B.generators()
    ]
    tag = "inv" if inverse else "std"
    return StructureConstantAlgebra(
        signature=("braided_tensor", A.signature, B.signature, chi.N, chi.c, tag),
        N=A.N,
        scalar_order=A.scalar_order,
        basis=basis,
        degrees=degrees,
        labels=labels,
        unit_mono=(A.unit_mono, B.unit_mono),
        pair_rule=rule,
        generator_monos=gens,
    )


def tensor_pair(TA, a, b):
    """The element a (x) b of a braided tensor algebra TA."""
    terms = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            terms[(ma, mb)] = ca * cb
    return TA.element(terms)


# ---------------------------------------------------------------------------
# Hopf structure data
# ---------------------------------------------------------------------------


class HopfData:
    """An algebra together with candidate Hopf structure maps as matrices.

    Fields: algebra, chi, tensor_algebra (the braided square), space, and
    the five structure maps m: H(x)H -> H, u: I -> H, Delta: H -> H(x)H,
    eps: H -> I, S: H -> H, all shift-0 GradedMaps.  The generator images
    the maps were extended from are kept in coproducts / counits /
    antipodes (keyed by generator name).
    """

    def __init__(self, algebra, chi, tensor_algebra, coproducts, counits,
                 antipodes):
        self.algebra = algebra
        self.chi = chi
        self.tensor_algebra = tensor_algebra
        self.coproducts = dict(coproducts)
        self.counits = dict(counits)
        self.antipodes = dict(antipodes)
        self._delta_memo = {}
        self._antipode_memo = {}
        self._eps_memo = {}
        self.space = algebra.graded_space()
        self.square = tensor(self.space, self.space)
        self.m = self._mult_map()
        self.u = GradedMap(
            GradedSpace.unit(algebra.N),
            self.space,
            Mat(algebra.dim, 1, {(algebra.index[algebra.unit_mono], 0): 1}),
        )
        self.Delta = self._delta_map()
        self.eps = self._eps_map()
        self.S = self._antipode_map()

    # -- element-level structure maps --------------------------------------

    def coproduct(self, a):
        """Delta(a) as an element of the braided tensor square."""
        out = self.tensor_algebra.zero()
        for mono, c in a.terms.items():
            out = out + c * self._delta_mono(mono)
        return out

    def counit(self, a):
        total = 0
        for mono, c in a.terms.items():
            total = total + c * self._eps_mono(mono)
        return total

    def antipode(self, a):
        out = self.algebra.zero()
        for mono, c in a.terms.items():
            out = out + c * self._antipode_mono(mono)
        return out

    def _gen_order(self):
        return [(name, next(iter(el.terms))) for name, el in
                self.algebra.generators()]

    def _delta_mono(self, mono):
        hit = self._delta_memo.get(mono)
        if hit is None:
            hit = self.tensor_algebra.unit()
            for (name, gmono), e in zip(self._gen_order(), mono):
                if e:
                    hit = hit * self.coproducts[name] ** e
            self._delta_memo[mono] = hit
        return hit

    def _eps_mono(self, mono):
        hit = self._eps_memo.get(mono)
        if hit is None:
            hit = Fraction(1)
            for (name, gmono), e in zip(self._gen_order(), mono):
                if e:
                    hit = hit * self.counits[name] ** e
            self._eps_memo[mono] = hit
        return hit

    def _antipode_mono(self, mono):
        hit = self._antipode_memo.get(mono)
        if hit is not None:
            return hit
        if mono == self.algebra.unit_mono:
            hit = self.algebra.unit()
        else:
            # peel the last letter: mono = rest * g, then
            # S(mono) = chi(deg rest, deg g) S(g) S(rest)
            last = max(i for i, e in enumerate(mono) if e)
            rest = tuple(
                e - 1 if i == last else e for i, e in enumerate(mono)
            )
            name = self.algebra.pres.gens[last]
            dg = self.algebra.pres.degrees[last] % self.algebra.N
            drest = (self.algebra.mono_degree(mono) - dg) % self.algebra.N
            s = self.chi.chi(drest, dg)
            hit = s * (self.antipodes[name] * self._antipode_mono(rest))
        self._antipode_memo[mono] = hit
        return hit

    # -- matrices -----------------------------------------------------------

    def _mult_map(self):
        A = self.algebra
        data = {}
        for ja, ma in enumerate(A.basis):
            for jb, mb in enumerate(A.basis):
                col = ja * A.dim + jb
                for m, s in A.pair_product(ma, mb).items():
                    data[(A.index[m], col)] = s
        return GradedMap(self.square, self.space, Mat(A.dim, A.dim ** 2, data))

    def _delta_map(self):
        A = self.algebra
        TA = self.tensor_algebra
        data = {}
        for j, mono in enumerate(A.basis):
            for pair, s in self._delta_mono(mono).terms.items():
                data[(TA.index[pair], j)] = s
        return GradedMap(self.space, self.square, Mat(A.dim ** 2, A.dim, data))

    def _eps_map(self):
        A = self.algebra
        data = {}
        for j, mono in enumerate(A.basis):
            v = self._eps_mono(mono)
            if v:
                data[(0, j)] = v
        return GradedMap(
            self.space, GradedSpace.unit(A.N), Mat(1, A.dim, data)
        )

    def _antipode_map(self):
        A = self.algebra
        data = {}
        for j, mono in enumerate(A.basis):
            for m, s in self._antipode_mono(mono).terms.items():
                data[(A.index[m], j)] = s
        return GradedMap(self.space, self.space, Mat(A.dim, A.dim, data))


def build_hopf(algebra, chi, coproducts, counits, antipodes):
    """Assemble HopfData from generator images.

    coproducts: name -> element of braided_tensor_algebra(A, A, chi)
    (anything accepted by tensor_pair works); counits: name -> scalar;
    antipodes: name -> element of A.
    """
    TA = braided_tensor_algebra(algebra, algebra, chi)
    fixed = {}
    for name, img in coproducts.items():
        if isinstance(img, AlgebraElement) and img.algebra.signature == TA.signature:
            fixed[name] = TA.element(img.terms)
        else:
            raise ValueError(
                "coproduct image for %r must live in the braided tensor square"
                % name
            )
    return HopfData(algebra, chi, TA, fixed, counits, antipodes)


def anyonic_hopf(p, c=1):
    """The anyonic line as a Hopf algebra in (Vec_{Z/p}, xi^{c*ij}).

    x is primitive: Delta(x) = x(x)1 + 1(x)x, eps(x) = 0, S(x) = -x.
    With the standard bicharacter (c=1) this is a braided Hopf algebra;
    c=0 (the unbraided square) violates multiplicativity of Delta as soon
    as p > 2 and serves as the negative control.
    """
    A = anyonic_line(p)
    chi = Bicharacter(p, c)
    TA = braided_tensor_algebra(A, A, chi)
    x = A.gen("x")
    one = A.unit()
    dx = tensor_pair(TA, x, one) + tensor_pair(TA, one, x)
    return HopfData(A, chi, TA, {"x": dx}, {"x": 0}, {"x": -x})


def taft_hopf(p):
    """The Taft algebra as an ordinary Hopf algebra (trivial grading).

    Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, eps(g) = 1, eps(x) = 0,
    S(g) = g^{p-1}, S(x) = -g^{p-1} x.
    """
    A = taft(p)
    chi = Bicharacter(1, 0)
    TA = braided_tensor_algebra(A, A, chi)
    g, x = A.gen("g"), A.gen("x")
    one = A.unit()
    cop = {
        "g": tensor_pair(TA, g, g),
        "x": tensor_pair(TA, x, one) + tensor_pair(TA, g, x),
    }
    cou = {"g": 1, "x": 0}
    ant = {"g": g ** (p - 1), "x": -(g ** (p - 1) * x)}
    return HopfData(A, chi, TA, cop, cou, ant)


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


def verify_bialgebra(H, chi=None):
    """Check the braided bialgebra axioms for HopfData, as matrix identities."""
    chi = H.chi if chi is None else chi
    V = H.space
    idv = GradedMap.identity(V)
    tau = braiding(V, V, chi)
    pair_labels = ["%s , %s" % (a, b) for a in V.labels for b in V.labels]
    checks = []

    lhs = H.Delta @ H.m
    rhs = (
        tensor_map(H.m, H.m)
        @ tensor_map(idv, tensor_map(tau, idv))
        @ tensor_map(H.Delta, H.Delta)
    )
    checks.append(
        map_check("coproduct_is_multiplicative", lhs, rhs, pair_labels)
    )
    checks.append(
        map_check(
            "coproduct_of_unit", H.Delta @ H.u, tensor_map(H.u, H.u), ["1"]
        )
    )
    checks.append(
        map_check(
            "counit_is_multiplicative",
            H.eps @ H.m,
            tensor_map(H.eps, H.eps),
            pair_labels,
        )
    )
    checks.append(
        map_check(
            "counit_of_unit",
            H.eps @ H.u,
            GradedMap.identity(GradedSpace.unit(V.N)),
            ["1"],
        )
    )
    checks.append(
        map_check(
            "coassociativity",
            tensor_map(H.Delta, idv) @ H.Delta,
            tensor_map(idv, H.Delta) @ H.Delta,
            list(V.labels),
        )
    )
    counit_ok = (
        tensor_map(H.eps, idv) @ H.Delta == idv
        and tensor_map(idv, H.eps) @ H.Delta == idv
    )
    checks.append(
        check(
            "counit_law",
            counit_ok,
            details="(eps(x)id).Delta = id = (id(x)eps).Delta",
        )
    )
    return checks


def verify_antipode(H):
    """Check the antipode axiom, (anti)morphism properties and report S^2."""
    V = H.space
    idv = GradedMap.identity(V)
    tau = braiding(V, V, H.chi)
    ue = H.u @ H.eps
    checks = [
        map_check(
            "antipode_left",
            H.m @ tensor_map(H.S, idv) @ H.Delta,
            ue,
            list(V.labels),
        ),
        map_check(
            "antipode_right",
            H.m @ tensor_map(idv, H.S) @ H.Delta,
            ue,
            list(V.labels),
        ),
        map_check(
            "antipode_is_antimultiplicative",
            H.S @ H.m,
            H.m @ tensor_map(H.S, H.S) @ tau,
            ["%s , %s" % (a, b) for a in V.labels for b in V.labels],
        ),
        map_check(
            "antipode_is_anticomultiplicative",
            H.Delta @ H.S,
            tau @ tensor_map(H.S, H.S) @ H.Delta,
            list(V.labels),
        ),
        check(
            "antipode_invertible",
            H.S.is_invertible(),
            details="rank %d of %d" % (H.S.rank(), V.dim),
        ),
    ]
    s2 = H.S @ H.S
    images = []
    for name, el in H.algebra.generators():
        img = H.algebra.element_from_column(
            s2.mat.col_dict(H.algebra.index[next(iter(el.terms))])
        )
        images.append({"generator": name, "square_antipode_image": repr(img)})
    checks.append(
        check(
            "antipode_square_recorded",
            True,
            details="S^2 on generators",
            witnesses=images,
        )
    )
    return checks


def coproduct_power(H, n):
    """The closed form Delta(x^n) = sum_i binom(n,i)_xi x^i (x) x^{n-i}.

    Only meaningful for the anyonic line; cross-checked elsewhere against
    the n-fold product of Delta(x) in the braided tensor square.
    """
    A = H.algebra
    xi = H.chi.chi(1, 1)
    terms = {}
    for i in range(n + 1):
        terms[((i,), (n - i,))] = q_binomial(n, i, xi)
    return H.tensor_algebra.element(terms)


def verify_coproduct_powers(H):
    """Check the closed form against iterated braided multiplication."""
    p = H.algebra.p
    dx = H.coproducts["x"]
    checks = []
    acc = H.tensor_algebra.unit()
    for n in range(p):
        formula = coproduct_power(H, n)
        ok = acc == formula
        also = H.coproduct(H.algebra.element({(n,): 1})) == formula
        checks.append(
            check(
                "coproduct_power_%d" % n,
                ok and also,
                details="Delta(x)^%d vs Gaussian binomial sum" % n,
                witnesses=None if (ok and also) else [
                    {"power": n, "product": repr(acc), "formula": repr(formula)}
                ],
            )
        )
        acc = acc * dx
    return checks


# ---------------------------------------------------------------------------
# modules given by generator actions
# ---------------------------------------------------------------------------


class AlgebraModule:
    """A finite-dimensional module over a presented algebra.

    Stored as one GradedMap per generator (shift = generator degree); the
    action of a monomial is the composite in the same order, so that
    (ab).v = a.(b.v).  Whether the generator actions satisfy the defining
    relations is checked separately by verify_module.
    """

    def __init__(self, algebra, space, ops):
        if space.N != algebra.N:
            raise ValueError("module grading group differs from the algebra's")
        self.algebra = algebra
        self.space = space
        self.ops = dict(ops)
        for name, el in algebra.generators():
            if name not in self.ops:
                raise ValueError("missing action of generator %r" % name)
            op = self.ops[name]
            if op.source != space or op.target != space:
                raise ValueError("action of %r is not an endomorphism" % name)
            if op.mat.data and op.shift != el.degree() % algebra.N:
                raise ValueError(
                    "action of %r has shift %d, expected %d"
                    % (name, op.shift, el.degree() % algebra.N)
                )
        self._mono_cache = {}

    @property
    def dim(self):
        return self.space.dim

    def op(self, name):
        return self.ops[name]

    def act_mono(self, mono):
        """Action of a basis monomial (exponent tuple) as a GradedMap."""
        hit = self._mono_cache.get(mono)
        if hit is None:
            hit = GradedMap.identity(self.space)
            for name, e in zip(self.algebra.pres.gens, mono):
                if e:
                    hit = hit @ self.ops[name] ** e
            self._mono_cache[mono] = hit
        return hit

    def act_matrix(self, element):
        """Action of an arbitrary element, as a plain matrix."""
        total = Mat.zeros(self.dim, self.dim)
        for mono, c in element.terms.items():
            total = total + self.act_mono(mono).mat.scale(c)
        return total

    def act(self, element):
        """Action of a homogeneous element, as a GradedMap."""
        return GradedMap(
            self.space, self.space, self.act_matrix(element),
            element.degree() % self.algebra.N,
        )

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraModule)
            and self.algebra.signature == other.algebra.signature
            and self.space == other.space
            and self.ops == other.ops
        )

    __hash__ = None

    def __repr__(self):
        return "AlgebraModule(%r, dim %d)" % (self.algebra.signature, self.dim)


def verify_module(M):
    """Check that the generator actions satisfy the defining relations."""
    pres = M.algebra.pres
    checks = []
    for i, name in enumerate(pres.gens):
        lhs = M.ops[name] ** pres.bounds[i]
        rhs_scalar = pres.power_rhs[i]
        rhs = (
            GradedMap.identity(M.space).scale(rhs_scalar)
            if rhs_scalar
            else GradedMap.zero(M.space, M.space, lhs.shift)
        )
        checks.append(
            map_check(
                "module relation %s^%d = %s" % (name, pres.bounds[i], rhs_scalar),
                lhs, rhs, list(M.space.labels),
            )
        )

    def word_op(word):
        out = GradedMap.identity(M.space)
        for gi, e in word:
            out = out @ M.ops[pres.gens[gi]] ** e
        return out

    for (hi, lo), branches in sorted(pres.straighten.items()):
        lhs = M.ops[pres.gens[hi]] @ M.ops[pres.gens[lo]]
        rhs = GradedMap.zero(M.space, M.space, lhs.shift)
        for s, word in branches:
            rhs = rhs + word_op(word).scale(s)
        checks.append(
            map_check(
                "module relation %s*%s straightens"
                % (pres.gens[hi], pres.gens[lo]),
                lhs, rhs, list(M.space.labels),
            )
        )
    return checks


def regular_module(A):
    """A acting on itself by left multiplication."""
    space = A.graded_space()
    ops = {}
    for name, el in A.generators():
        ops[name] = GradedMap(
            space, space, A.left_mult_operator(el), el.degree() % A.N
        )
    return AlgebraModule(A, space, ops)


def trivial_module(H):
    """The base field as a module, via the counit."""
    A = H.algebra
    space = GradedSpace.unit(A.N)
    ops = {}
    for name, el in A.generators():
        v = H.counits[name]
        dg = el.degree() % A.N
        mat = Mat(1, 1, {(0, 0): v} if v else None)
        ops[name] = GradedMap(space, space, mat, 0 if v else dg)
    return AlgebraModule(A, space, ops)


def module_tensor(H, V, W):
    """The braided tensor product of modules over a Hopf algebra.

    h.(v (x) w) = sum chi(deg h_2, deg v) (h_1 . v) (x) (h_2 . w) over the
    terms h_1 (x) h_2 of Delta(h).
    """
    if V.algebra.signature != H.algebra.signature:
        raise ValueError("left factor is a module over a different algebra")
    if W.algebra.signature != H.algebra.signature:
        raise ValueError("right factor is a module over a different algebra")
    A = H.algebra
    sp = tensor(V.space, W.space)
    ops = {}
    for name, el in A.generators():
        dg = el.degree() % A.N
        total = GradedMap.zero(sp, sp, dg)
        for (ma, mb), c in H.coproducts[name].terms.items():
            db = A.mono_degree(mb)
            cross = GradedMap.from_diagonal(
                V.space, lambda d, db=db: H.chi.chi(db, d)
            )
            total = total + tensor_map(
                V.act_mono(ma) @ cross, W.act_mono(mb)
            ).scale(c)
        ops[name] = total
    return AlgebraModule(A, sp, ops)


# ---------------------------------------------------------------------------
# transmutation: Taft modules <-> graded modules over the anyonic line
# ---------------------------------------------------------------------------


def transmute(M):
    """Turn a module over taft(p) into a graded module over anyonic_line(p).

    The grading is by eigenvalue of the g-action (degree i = the
    xi^i-eigenspace); x becomes a degree-1 operator in that basis.  The
    eigenbasis is chosen greedily, projecting the input basis vectors in
    order, so a module whose g-action is already diagonal keeps its basis.
    The change of basis is attached as .basis_change.
    """
    A = M.algebra
    if A.signature[0] != "taft":
        raise ValueError("transmute expects a module over the Taft algebra")
    p = A.p
    xi = A.xi
    n = M.dim
    G = M.ops["g"].mat
    if G ** p != Mat.identity(n):
        raise ValueError("g-action does not have order dividing %d" % p)
    gpow = [Mat.identity(n)]
    for _ in range(p - 1):
        gpow.append(gpow[-1] * G)
    unit = Fraction(1, p)
    projectors = []
    for i in range(p):
        acc = Mat.zeros(n, n)
        for b in range(p):
            acc = acc + gpow[b].scale(unit * xi ** (-i * b))
        projectors.append(acc)

    chosen_cols = []
    degrees = []
    rank_rows = []
    for k in range(n):
        col = Mat(n, 1, {(k, 0): 1})
        for i in range(p):
            v = projectors[i] * col
            if v.is_zero():
                continue
            candidate = from_cols(n, chosen_cols + [v.col_dict(0)])
            if candidate.rank() == len(chosen_cols) + 1:
                chosen_cols.append(v.col_dict(0))
                degrees.append(i)
            if len(chosen_cols) == n:
                break
        if len(chosen_cols) == n:
            break
    P = from_cols(n, chosen_cols)
    Pinv = P.inverse()
    space = GradedSpace(p, degrees)
    X = Pinv * M.ops["x"].mat * P
    try:
        xop = GradedMap(space, space, X, 1)
    except ValueError:
        raise ValueError(
            "x-action is not homogeneous of degree 1 in the g-eigenbasis; "
            "the input does not satisfy the Taft relations"
        )
    out = AlgebraModule(anyonic_line(p), space, {"x": xop})
    out.basis_change = P
    return out


def untransmute(M):
    """Turn a graded module over anyonic_line(p) back into a Taft module.

    g acts diagonally by xi^deg on each graded piece, x by the given
    operator; this is inverse to transmute on modules in eigenbasis form.
    """
    A = M.algebra
    if A.signature[0] != "anyonic_line":
        raise ValueError("untransmute expects a module over the anyonic line")
    p = A.p
    xi = A.xi
    space = GradedSpace(1, [0] * M.dim, M.space.labels)
    g = Mat.diagonal([xi ** d for d in M.space.degrees])
    ops = {
        "g": GradedMap(space, space, g),
        "x": GradedMap(space, space, M.ops["x"].mat),
    }
    return AlgebraModule(taft(p), space, ops)
