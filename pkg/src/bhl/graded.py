"""Z/N-graded vector spaces and the braided category (Vec_{Z/N}, chi).

A bicharacter chi(i,j) = zeta_N^(c*i*j) turns graded vector spaces into a
braided category: the braiding swaps tensor factors at the cost of a chi
scalar, the twist is theta(v) = chi(x,x) v on degree x, and anti-twists are
the degree-wise scalars satisfying the inverse-square law
sigma(i+j) = omega(i,j)^(-1) sigma(i) sigma(j) with omega = chi * chi-flipped.

Spaces carry a flat ordered basis (one degree per basis vector); maps are
sparse exact matrices with a degree shift, and homogeneity is enforced at
construction.  Shift-0 maps are the categorical morphisms; the shifted ones
are what algebra generators act by.
"""

from __future__ import annotations

from .exactmat import Mat
from .scalars import format_scalar, root_of_unity


class Bicharacter:
    """chi(i,j) = zeta_N^(c*i*j) on Z/N x Z/N."""

    __slots__ = ("N", "c")

    def __init__(self, N, c=1):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.c = c % N

    def chi(self, i, j):
        return root_of_unity(self.N, self.c * i * j)

    def chi_inv(self, i, j):
        return root_of_unity(self.N, -self.c * i * j)

    def omega(self, i, j):
        """omega(i,j) = chi(i,j) chi(j,i) = zeta^(2c i j)."""
        return root_of_unity(self.N, 2 * self.c * i * j)

    def theta(self, i):
        return self.chi(i, i)

    def __eq__(self, other):
        return isinstance(other, Bicharacter) and (self.N, self.c) == (other.N, other.c)

    def __hash__(self):
        return hash((self.N, self.c))

    def __repr__(self):
        return "Bicharacter(N=%d, c=%d)" % (self.N, self.c)


class GradedSpace:
    """A finite-dimensional Z/N-graded space with an ordered homogeneous basis."""

    __slots__ = ("N", "degrees", "labels")

    def __init__(self, N, degrees, labels=None):
        self.N = N
        self.degrees = tuple(d % N for d in degrees)
        if labels is None:
            labels = tuple("v%d" % i for i in range(len(self.degrees)))
        else:
            labels = tuple(labels)
            if len(labels) != len(self.degrees):
                raise ValueError("label count != basis size")
        self.labels = labels

    @staticmethod
    def unit(N):
        return GradedSpace(N, (0,), ("1",))

    @staticmethod
    def from_dims(N, dims):
        """dims: iterable of (degree, dimension) pairs, in construction order."""
        degrees, labels = [], []
        for deg, dim in dims:
            for k in range(dim):
                labels.append("v%d" % len(labels))
                degrees.append(deg)
        return GradedSpace(N, degrees, labels)

    @property
    def dim(self):
        return len(self.degrees)

    def dims_by_degree(self):
        out = [0] * self.N
        for d in self.degrees:
            out[d] += 1
        return tuple(out)

    def __eq__(self, other):
        # labels are bookkeeping only: I (x) V and V agree on the nose
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return self.N == other.N and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.N, self.degrees))

    def __repr__(self):
        return "GradedSpace(N=%d, degrees=%s)" % (self.N, list(self.degrees))

    def to_json(self):
        return {
            "N": self.N,
            "degrees": list(self.degrees),
            "labels": list(self.labels),
        }


def tensor(V: GradedSpace, W: GradedSpace) -> GradedSpace:
    """V (x) W with the flat row-major basis v_i (x) w_j; degrees add."""
    if V.N != W.N:
        raise ValueError("grading group mismatch: N=%d vs N=%d" % (V.N, W.N))
    degrees = [dv + dw for dv in V.degrees for dw in W.degrees]
    if V.dim == 1 and V.degrees == (0,):
        labels = W.labels
    elif W.dim == 1 and W.degrees == (0,):
        labels = V.labels
    else:
        labels = tuple(
            "%s*%s" % (lv, lw) for lv in V.labels for lw in W.labels
        )
    return GradedSpace(V.N, degrees, labels)


def left_dual(V: GradedSpace) -> GradedSpace:
    """V^ : same basis order, degrees negated."""
    return GradedSpace(V.N, [-d for d in V.degrees],
                       tuple(l + "^" for l in V.labels))


def right_dual(V: GradedSpace) -> GradedSpace:
    """^V : same basis order, degrees negated."""
    return GradedSpace(V.N, [-d for d in V.degrees],
                       tuple("^" + l for l in V.labels))


class GradedMap:
    """A homogeneous exact linear map source -> target of fixed degree shift."""

    __slots__ = ("source", "target", "shift", "mat")

    def __init__(self, source, target, mat, shift=0):
        if source.N != target.N:
            raise ValueError("grading group mismatch")
        if mat.rows != target.dim or mat.cols != source.dim:
            raise ValueError(
                "matrix is %dx%d but map needs %dx%d"
                % (mat.rows, mat.cols, target.dim, source.dim)
            )
        N = source.N
        shift %= N
        for (r, c) in mat.data:
            if (target.degrees[r] - source.degrees[c] - shift) % N:
                raise ValueError(
                    "entry (%d,%d) breaks homogeneity: target deg %d != source deg %d + %d"
                    % (r, c, target.degrees[r], source.degrees[c], shift)
                )
        self.source = source
        self.target = target
        self.shift = shift
        self.mat = mat

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def identity(V):
        return GradedMap(V, V, Mat.identity(V.dim))

    @staticmethod
    def zero(V, W, shift=0):
        return GradedMap(V, W, Mat.zeros(W.dim, V.dim), shift)

    @staticmethod
    def from_diagonal(V, scalar_of_degree):
        """Diagonal shift-0 map v |-> scalar_of_degree(deg v) * v."""
        return GradedMap(
            V, V, Mat.diagonal([scalar_of_degree(d) for d in V.degrees])
        )

    # -- category structure -----------------------------------------------------

    def __matmul__(self, other):
        """self after other (usual composition order)."""
        if not isinstance(other, GradedMap):
            return NotImplemented
        if other.target != self.source:
            raise TypeError(
                "cannot compose: middle objects differ (%r vs %r)"
                % (other.target, self.source)
            )
        return GradedMap(other.source, self.target, self.mat * other.mat,
                         self.shift + other.shift)

    def then(self, other):
        """Diagram order: first self, then other."""
        return other @ self

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("shape mismatch in map sum")
        if self.shift != other.shift and not (self.mat.is_zero() or other.mat.is_zero()):
            raise ValueError("cannot add maps of different shifts")
        shift = other.shift if self.mat.is_zero() else self.shift
        return GradedMap(self.source, self.target, self.mat + other.mat, shift)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return GradedMap(self.source, self.target, self.mat.scale(scalar), self.shift)

    def __pow__(self, e):
        if self.source != self.target:
            raise ValueError("powers need an endomorphism")
        result = GradedMap.identity(self.source)
        for _ in range(e):
            result = self @ result
        return result

    def inverse(self):
        return GradedMap(self.target, self.source, self.mat.inverse(), -self.shift)

    def rank(self):
        return self.mat.rank()

    def nullity(self):
        return self.mat.nullity()

    def is_invertible(self):
        return self.source.dim == self.target.dim and self.mat.rank() == self.source.dim

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        if self.mat.is_zero() and other.mat.is_zero():
            return True
        return self.shift == other.shift and self.mat == other.mat

    def __repr__(self):
        return "GradedMap(%r -> %r, shift=%d, %d entries)" % (
            self.source, self.target, self.shift, len(self.mat.data))

    def to_json(self):
        entries = sorted(
            [r, c, format_scalar(v)] for (r, c), v in self.mat.data.items()
        )
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "shift": self.shift,
            "entries": entries,
        }


def tensor_map(f: GradedMap, g: GradedMap) -> GradedMap:
    """f (x) g on the flat tensor bases; shifts add."""
    return GradedMap(
        tensor(f.source, g.source),
        tensor(f.target, g.target),
        f.mat.kron(g.mat),
        f.shift + g.shift,
    )


def braiding(V: GradedSpace, W: GradedSpace, chi: Bicharacter) -> GradedMap:
    """tau: V (x) W -> W (x) V,  v (x) w |-> chi(deg v, deg w) w (x) v."""
    data = {}
    for i, dv in enumerate(V.degrees):
        for j, dw in enumerate(W.degrees):
            data[j * V.dim + i, i * W.dim + j] = chi.chi(dv, dw)
    return GradedMap(tensor(V, W), tensor(W, V), Mat(W.dim * V.dim, V.dim * W.dim, data))


def braiding_inverse(V: GradedSpace, W: GradedSpace, chi: Bicharacter) -> GradedMap:
    """Inverse of braiding(V, W): W (x) V -> V (x) W with chi(deg v, deg w)^(-1)."""
    data = {}
    for i, dv in enumerate(V.degrees):
        for j, dw in enumerate(W.degrees):
            data[i * W.dim + j, j * V.dim + i] = chi.chi_inv(dv, dw)
    return GradedMap(tensor(W, V), tensor(V, W), Mat(V.dim * W.dim, W.dim * V.dim, data))


def twist_theta(V: GradedSpace, chi: Bicharacter) -> GradedMap:
    """theta(v) = chi(x, x) v on degree x."""
    return GradedMap.from_diagonal(V, chi.theta)


class AntiTwist:
    """Degree-wise scalars with sigma(i+j) = omega(i,j)^(-1) sigma(i) sigma(j)."""

    __slots__ = ("chi", "values")

    def __init__(self, chi: Bicharacter, values):
        values = tuple(values)
        if len(values) != chi.N:
            raise ValueError("need one scalar per degree 0..N-1")
        for i in range(chi.N):
            for j in range(chi.N):
                lhs = values[(i + j) % chi.N]
                rhs = chi.omega(i, j).inverse() * values[i] * values[j]
                if lhs != rhs:
                    raise ValueError(
                        "anti-twist law fails at (%d,%d): %s != %s"
                        % (i, j, lhs, rhs)
                    )
        self.chi = chi
        self.values = values

    @staticmethod
    def canonical(chi: Bicharacter):
        """sigma(x) = chi(x, -x) = zeta^(-c x^2)."""
        return AntiTwist(chi, [root_of_unity(chi.N, -chi.c * i * i) for i in range(chi.N)])

    @staticmethod
    def with_mu(chi: Bicharacter, mu: int):
        """sigma_mu(i) = zeta^(-c i^2 - mu i) (the c=1 case reads xi^(-i^2-mu*i))."""
        return AntiTwist(
            chi, [root_of_unity(chi.N, -chi.c * i * i - mu * i) for i in range(chi.N)]
        )

    @staticmethod
    def with_parameter(chi: Bicharacter, t: int):
        """Canonical anti-twist times the character lambda_t(i) = zeta^(t i)."""
        return AntiTwist(
            chi, [root_of_unity(chi.N, -chi.c * i * i + t * i) for i in range(chi.N)]
        )

    @property
    def parameter(self):
        """The t with self = canonical * lambda_t."""
        for t in range(self.chi.N):
            if all(self.values[i] == root_of_unity(self.chi.N, -self.chi.c * i * i + t * i)
                   for i in range(self.chi.N)):
                return t
        raise ValueError("anti-twist is not of the form canonical * character")

    def __call__(self, degree):
        return self.values[degree % self.chi.N]

    def __eq__(self, other):
        return (isinstance(other, AntiTwist)
                and self.chi == other.chi and self.values == other.values)

    def __hash__(self):
        return hash((self.chi, self.values))

    def __repr__(self):
        return "AntiTwist(N=%d, c=%d, t=%d)" % (self.chi.N, self.chi.c, self.parameter)


def anti_twist(V: GradedSpace, sigma: AntiTwist) -> GradedMap:
    return GradedMap.from_diagonal(V, sigma)


def ev_coev(V: GradedSpace):
    """The four duality maps (ev, ev_l, coev, coev_l).

    ev:     V^ (x) V  -> I      e^i (x) e_j |-> delta_ij
    ev_l:   V  (x) ^V -> I      e_i (x) ^e_j |-> delta_ij
    coev:   I -> V (x) V^       1 |-> sum e_i (x) e^i
    coev_l: I -> ^V (x) V       1 |-> sum ^e_i (x) e_i
    """
    I = GradedSpace.unit(V.N)
    n = V.dim
    dualL = left_dual(V)
    dualR = right_dual(V)
    pair = Mat(1, n * n, {(0, i * n + i): 1 for i in range(n)})
    copair = Mat(n * n, 1, {(i * n + i, 0): 1 for i in range(n)})
    ev = GradedMap(tensor(dualL, V), I, pair)
    ev_l = GradedMap(tensor(V, dualR), I, pair)
    coev = GradedMap(I, tensor(V, dualL), copair)
    coev_l = GradedMap(I, tensor(dualR, V), copair)
    return ev, ev_l, coev, coev_l


def braided_module_E(X: GradedSpace, M: GradedSpace, sigma: AntiTwist,
                     chi: Bicharacter) -> GradedMap:
    """E on X (x) M: multiplies x (x) m (degrees a, i) by omega(a,i)^(-1) sigma(a)."""
    XM = tensor(X, M)
    diag = []
    for a in X.degrees:
        sa = sigma(a)
        for i in M.degrees:
            diag.append(chi.omega(a, i).inverse() * sa)
    return GradedMap(XM, XM, Mat.diagonal(diag))
