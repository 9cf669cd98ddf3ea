"""Classification combinatorics for graded braided-module structures.

Over (Vec_{Z/N}, chi) with chi(i,j) = zeta^{cij}, everything reduces to
finite scalar tables:

* characters lambda_t(x) = zeta^{tx} and anti-twists  sigma lambda_t,
  sigma(x) = zeta^{-cx^2} the canonical one;
* the symmetrization homomorphism  omega(-, y) = lambda_{2cy}  whose
  cosets are the braided-isomorphism classes;
* stable isomorphism, tested verbatim: sigma lambda_s ~ sigma lambda_t
  when some y satisfies both  s = t + 2cy (mod N)  and the stability
  condition  lambda_t(y) = sigma(y), i.e.  ty = -cy^2 (mod N) — all
  witnesses y enumerated, then the symmetric-transitive closure taken;
* the packet report I = theta(G) = {zeta^{cx^2}} with multiplicities
  n_i = #{x : theta(x) = i}, summing to N;
* the eta invariant  eta(y, sigma') = omega(y,y) sigma'(y)  on arrows
  (y, sigma'), whose kernel cuts out the canonically stable structures.

The last section handles a finite group given by a Cayley table: validate
the table, then list conjugacy classes with centralizer orders — the
combinatorial shadow of the Rep(G) decomposition, where singleton classes
are the ones visible through the one-object embedding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import AntiTwist, Bicharacter
from .scalars import format_scalar, root_of_unity


# ---------------------------------------------------------------------------
# characters and anti-twists over Z/N
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    """All characters of Z/N, tabulated: row t is (zeta^{tx})_x."""

    N: int
    values: tuple

    @staticmethod
    def build(N):
        zeta = root_of_unity(N)
        rows = tuple(
            tuple(zeta ** (t * x) for x in range(N)) for t in range(N)
        )
        if len(set(rows)) != N:
            raise AssertionError("characters are not pairwise distinct")
        return CharacterTable(N, rows)

    def __getitem__(self, t):
        return self.values[t % self.N]


def anti_twists(N, c):
    """The N anti-twists sigma lambda_t, t in Z/N (each one validated)."""
    chi = Bicharacter(N, c)
    return [AntiTwist.with_parameter(chi, t) for t in range(N)]


def omega_hom(N, c):
    """The homomorphism G -> G^: y |-> omega(-, y) = lambda_{2cy},
    returned as the map on character indices."""
    return {y: (2 * c * y) % N for y in range(N)}


def classify_braided(N, c):
    """Braided-isomorphism classes of anti-twists: cosets of image(omega).

    Returns {"classes", "omega_image", "omega_trivial", "omega_injective"}.
    Classes are sorted tuples of parameter values t.
    """
    om = omega_hom(N, c)
    image = sorted(set(om.values()))
    seen = set()
    classes = []
    for t in range(N):
        if t in seen:
            continue
        coset = sorted((t + w) % N for w in image)
        classes.append(tuple(coset))
        seen.update(coset)
    return {
        "classes": classes,
        "omega_image": image,
        "omega_trivial": image == [0],
        "omega_injective": len(image) == N,
    }


def stable_witnesses(N, c, s, t):
    """All y with s = t + 2cy and ty = -cy^2 (mod N)."""
    return [
        y for y in range(N)
        if (t + 2 * c * y - s) % N == 0 and (t * y + c * y * y) % N == 0
    ]


def classify_stable(N, c):
    """Stable-isomorphism classes of anti-twists, plus the packet report.

    The relation "some y satisfies both conditions" need not be
    transitive a priori, so the closure is taken; witnesses for each
    related ordered pair are recorded.
    """
    related = {}
    for s in range(N):
        for t in range(N):
            ys = stable_witnesses(N, c, s, t)
            if ys:
                related[(s, t)] = ys
    # symmetric-transitive closure
    parent = list(range(N))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (s, t) in related:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups = {}
    for t in range(N):
        groups.setdefault(find(t), []).append(t)
    classes = [tuple(sorted(v)) for _, v in sorted(groups.items())]
    return {
        "classes": classes,
        "witnesses": related,
        "packet": packet_report(N, c),
    }


@dataclass(frozen=True)
class PacketReport:
    """I = theta(G) with multiplicities; entries are (value, exponent
    representative c*x^2 mod N, multiplicity, elements)."""

    N: int
    entries: tuple

    @property
    def values(self):
        return [e["value"] for e in self.entries]

    @property
    def multiplicities(self):
        return [e["multiplicity"] for e in self.entries]

    def total(self):
        return sum(self.multiplicities)

    def to_json(self):
        return {
            "N": self.N,
            "entries": [
                {
                    "value": format_scalar(e["value"]),
                    "exponent": e["exponent"],
                    "multiplicity": e["multiplicity"],
                    "elements": list(e["elements"]),
                }
                for e in self.entries
            ],
        }


def packet_report(N, c):
    """Group the twist values theta(x) = zeta^{c x^2} over x in Z/N."""
    zeta = root_of_unity(N)
    by_exponent = {}
    for x in range(N):
        e = (c * x * x) % N
        by_exponent.setdefault(e, []).append(x)
    entries = tuple(
        {
            "value": zeta ** e,
            "exponent": e,
            "multiplicity": len(xs),
            "elements": tuple(xs),
        }
        for e, xs in sorted(by_exponent.items())
    )
    return PacketReport(N, entries)


def eta_kernel(N, c):
    """The eta invariant on arrows (y, sigma lambda_t) and its kernel.

    eta(y, sigma') = omega(y, y) sigma'(y); the arrow runs from parameter
    t to t + 2cy.  Returns {"arrows", "kernel_size", "kernel_arrows"}.
    """
    chi = Bicharacter(N, c)
    twists = anti_twists(N, c)
    arrows = []
    for t in range(N):
        sig = twists[t]
        for y in range(N):
            val = chi.omega(y, y) * sig(y)
            arrows.append(
                {
                    "y": y,
                    "source": t,
                    "target": (t + 2 * c * y) % N,
                    "eta": val,
                    "in_kernel": val == 1,
                }
            )
    kernel = [a for a in arrows if a["in_kernel"]]
    return {
        "arrows": arrows,
        "kernel_size": len(kernel),
        "kernel_arrows": kernel,
    }


def dagger_involution(N, c):
    """The pairing (y, sigma lambda_t) |-> (-y, sigma lambda_{-t}).

    Returns the map on (y, t) pairs; it squares to the identity and
    preserves the eta invariant (checked in the tests).
    """
    return {
        (y, t): ((-y) % N, (-t) % N)
        for y in range(N) for t in range(N)
    }


# ---------------------------------------------------------------------------
# finite groups from Cayley tables
# ---------------------------------------------------------------------------


class CayleyGroup:
    """A finite group given by its multiplication table.

    table[i][j] is the index of g_i g_j.  Identity, inverses and full
    associativity are validated on construction.
    """

    def __init__(self, table):
        n = len(table)
        for row in table:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("Cayley table is not an n x n index table")
        self.table = [list(row) for row in table]
        self.order = n
        identity = None
        for e in range(n):
            if all(self.table[e][j] == j and self.table[j][e] == j
                   for j in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("Cayley table has no identity element")
        self.identity = identity
        self.inverse = [None] * n
        for i in range(n):
            for j in range(n):
                if (self.table[i][j] == identity
                        and self.table[j][i] == identity):
                    self.inverse[i] = j
                    break
            if self.inverse[i] is None:
                raise ValueError("element %d has no inverse" % i)
        for a in range(n):
            for b in range(n):
                ab = self.table[a][b]
                for cc in range(n):
                    if self.table[ab][cc] != self.table[a][self.table[b][cc]]:
                        raise ValueError(
                            "Cayley table is not associative at (%d,%d,%d)"
                            % (a, b, cc)
                        )

    def mul(self, a, b):
        return self.table[a][b]

    @staticmethod
    def from_json(data):
        return CayleyGroup(data)


def cyclic_cayley(n):
    return CayleyGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def rep_g_decomposition(G):
    """Conjugacy classes of a CayleyGroup with centralizer data.

    Returns a list of {"representative", "size", "centralizer_order",
    "singleton"} sorted by representative index.
    """
    n = G.order
    seen = [False] * n
    out = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = sorted(
            {G.mul(G.mul(g, x), G.inverse[g]) for g in range(n)}
        )
        for y in orbit:
            seen[y] = True
        centralizer = sum(
            1 for g in range(n) if G.mul(g, x) == G.mul(x, g)
        )
        out.append(
            {
                "representative": orbit[0],
                "size": len(orbit),
                "centralizer_order": centralizer,
                "singleton": len(orbit) == 1,
            }
        )
    return out
