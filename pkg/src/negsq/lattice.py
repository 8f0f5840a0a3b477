"""Exact intersection-form arithmetic for simply-connected 4-manifolds.

A manifold enters the computations either as the Gram matrix of its
intersection pairing or as the bare numeric invariants (b2, sigma, spin).
Everything here is exact: determinants come from fraction-free integer
elimination, signatures from a symmetric pivoting reduction over rationals,
characteristic vectors from elimination over GF(2).  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd

from .errors import DimensionMismatch, InvariantViolation, ValidationError

HomClass = tuple[int, ...]


def as_hom_class(values, rank: int | None = None) -> HomClass:
    """Coerce a sequence of integers to a homology-class tuple.

    When ``rank`` is given, the length must match it exactly.
    """
    try:
        coords = tuple(int(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"homology class must be a sequence of integers, got {values!r}") from exc
    if rank is not None and len(coords) != rank:
        raise DimensionMismatch(f"class has length {len(coords)} but the form has rank {rank}")
    return coords


def divisibility(coords) -> int:
    """Largest d such that the class is d times an integral class.

    Equals the gcd of the coordinates; invariant under unimodular change of
    basis.  The zero class gives 0.
    """
    return reduce(gcd, (abs(int(c)) for c in coords), 0)


def _bareiss_determinant(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def _symmetric_inertia(entries) -> tuple[int, int]:
    """Counts of positive and negative pivots of a symmetric matrix.

    Exact congruence reduction over the rationals.  Uses 1x1 pivots while a
    nonzero diagonal entry remains; once every candidate diagonal pivot
    vanishes, a hyperbolic 2x2 off-diagonal pivot contributes one pivot of
    each sign.  A nondegenerate form always reduces completely.
    """
    n = len(entries)
    m = [[Fraction(v) for v in row] for row in entries]
    active = list(range(n))
    pos = neg = 0
    while active:
        k = next((i for i in active if m[i][i] != 0), None)
        if k is not None:
            pivot = m[k][k]
            if pivot > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            for i in active:
                if m[i][k] == 0:
                    continue
                c = m[i][k] / pivot
                row_k = m[k]
                row_i = m[i]
                for j in active:
                    row_i[j] -= c * row_k[j]
            continue
        block = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
        if block is None:
            raise InvariantViolation("zero block in symmetric reduction; the form is degenerate")
        i0, j0 = block
        a = m[i0][j0]
        pos += 1
        neg += 1
        active.remove(i0)
        active.remove(j0)
        for u in active:
            ci = m[u][i0] / a
            cj = m[u][j0] / a
            if ci == 0 and cj == 0:
                continue
            row_i0 = m[i0]
            row_j0 = m[j0]
            row_u = m[u]
            for v in active:
                row_u[v] -= ci * row_j0[v] + cj * row_i0[v]
    return pos, neg


@dataclass(frozen=True)
class GramForm:
    """Symmetric unimodular integer Gram matrix of rank >= 1.

    Symmetry and unimodularity are checked eagerly; violations report the
    position of the first offending entry.  Instances are immutable and all
    operations are pure functions, so concurrent reads are safe.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.entries
        try:
            n = len(rows)
        except TypeError as exc:
            raise ValidationError("Gram matrix must be a sequence of rows") from exc
        if n == 0:
            raise ValidationError("Gram matrix must have rank at least 1")
        coerced = []
        for i, row in enumerate(rows):
            try:
                row = tuple(row)
            except TypeError as exc:
                raise ValidationError(f"row {i} is not a sequence") from exc
            if len(row) != n:
                raise ValidationError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise ValidationError(f"entry at row {i}, column {j} is not an integer: {v!r}")
            coerced.append(row)
        for i in range(n):
            for j in range(i + 1, n):
                if coerced[i][j] != coerced[j][i]:
                    raise InvariantViolation(
                        f"matrix is not symmetric: entry at row {i}, column {j} is "
                        f"{coerced[i][j]} but row {j}, column {i} is {coerced[j][i]}"
                    )
        det = _bareiss_determinant([list(r) for r in coerced])
        if det not in (1, -1):
            raise InvariantViolation(f"form is not unimodular: determinant is {det}")
        object.__setattr__(self, "entries", tuple(coerced))
        object.__setattr__(self, "_det", det)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def determinant(self) -> int:
        return self._det

    def pair(self, x, y) -> int:
        """Exact intersection pairing x . y = x^T G y."""
        x = as_hom_class(x, self.rank)
        y = as_hom_class(y, self.rank)
        return sum(xv * sum(g * yv for g, yv in zip(row, y)) for xv, row in zip(x, self.entries))

    def square(self, x) -> int:
        """Self-intersection x . x."""
        return self.pair(x, x)

    def is_characteristic(self, x) -> bool:
        """True iff x . v = v . v (mod 2) for every class v.

        By bilinearity it is enough to test the basis vectors, i.e. that
        (G x)_i and G_ii agree mod 2 for every i.
        """
        x = as_hom_class(x, self.rank)
        for i, row in enumerate(self.entries):
            if (sum(g * xv for g, xv in zip(row, x)) - row[i]) % 2:
                return False
        return True

    def characteristic_rep(self) -> HomClass:
        """The unique 0/1 vector x with x . v = v . v (mod 2) for all v.

        Solves G x = diag(G) over GF(2).  Unimodularity makes G invertible
        mod 2, so the solution exists and is unique; it is the zero vector
        exactly when the form is even.
        """
        n = self.rank
        aug = [[self.entries[i][j] & 1 for j in range(n)] + [self.entries[i][i] & 1] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise InvariantViolation("Gram matrix is singular mod 2; the form cannot be unimodular")
            aug[col], aug[piv] = aug[piv], aug[col]
            for r in range(n):
                if r != col and aug[r][col]:
                    aug[r] = [a ^ b for a, b in zip(aug[r], aug[col])]
        return tuple(row[n] for row in aug)

    @cached_property
    def inertia(self) -> tuple[int, int]:
        """(number of positive, number of negative) diagonal signs."""
        return _symmetric_inertia(self.entries)

    def signature(self) -> int:
        """Signature computed by exact symmetric reduction (Sylvester inertia)."""
        pos, neg = self.inertia
        return pos - neg

    def is_even(self) -> bool:
        """True iff v . v is even for every v, i.e. the diagonal is even."""
        return all(row[i] % 2 == 0 for i, row in enumerate(self.entries))

    def direct_sum(self, other: GramForm) -> GramForm:
        """Block-diagonal sum; rank and signature add, parity is the and."""
        n, m = self.rank, other.rank
        rows = [row + (0,) * m for row in self.entries]
        rows += [(0,) * n + row for row in other.entries]
        return GramForm(tuple(rows))

    def negated(self) -> GramForm:
        """The form with reversed orientation: every entry negated."""
        return GramForm(tuple(tuple(-v for v in row) for row in self.entries))


def direct_sum(first: GramForm, *rest: GramForm) -> GramForm:
    return reduce(GramForm.direct_sum, rest, first)


def diagonal_form(values) -> GramForm:
    """Diagonal form <v1> + <v2> + ... (each value must be +1 or -1)."""
    values = tuple(int(v) for v in values)
    return GramForm(tuple(tuple(v if i == j else 0 for j in range(len(values))) for i, v in enumerate(values)))


def hyperbolic_plane() -> GramForm:
    """The even rank-2 form H = [[0,1],[1,0]] of signature 0."""
    return GramForm(((0, 1), (1, 0)))


# Gram matrix of the positive-definite even unimodular rank-8 lattice:
# vertices 0..6 form a chain, vertex 7 hangs off vertex 2.
_E8_ROWS = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)


def e8_form() -> GramForm:
    """The positive-definite E8 form (even, unimodular, signature +8)."""
    return GramForm(_E8_ROWS)


@dataclass(frozen=True)
class ManifoldModel:
    """Numeric invariants of the ambient manifold, with the Gram matrix
    attached when one is known.

    All bound computations consume only (b2, sigma, spin); class-level
    predicates need the Gram matrix and are supplied as explicit flags when
    the model is abstract.
    """

    b2: int
    sigma: int
    spin: bool
    gram: GramForm | None = None

    def __post_init__(self):
        if self.b2 < 0:
            raise InvariantViolation(f"b2 must be non-negative, got {self.b2}")
        if abs(self.sigma) > self.b2:
            raise InvariantViolation(f"|sigma| = {abs(self.sigma)} exceeds b2 = {self.b2}")
        if (self.b2 - self.sigma) % 2:
            raise InvariantViolation(f"sigma = {self.sigma} and b2 = {self.b2} must have the same parity")

    @classmethod
    def from_gram(cls, gram: GramForm) -> ManifoldModel:
        return cls(b2=gram.rank, sigma=gram.signature(), spin=gram.is_even(), gram=gram)

    @classmethod
    def from_invariants(cls, b2: int, sigma: int, spin: bool) -> ManifoldModel:
        return cls(b2=int(b2), sigma=int(sigma), spin=bool(spin))

    def smoothness_warnings(self) -> tuple[str, ...]:
        """Invariant combinations that no smooth closed manifold can have.

        These are warnings rather than errors so that hypothetical invariants
        can still be explored.
        """
        notes = []
        if self.spin and self.sigma % 16 != 0:
            notes.append(
                f"spin with sigma = {self.sigma} not divisible by 16: "
                "no smooth closed spin 4-manifold has these invariants (Rokhlin)"
            )
        if self.spin and self.b2 > 0 and 4 * self.b2 < 5 * abs(self.sigma) + 8:
            notes.append(
                f"spin with 4*b2 = {4 * self.b2} < 5*|sigma| + 8 = {5 * abs(self.sigma) + 8}: "
                "violates the 5/4 inequality for smooth spin 4-manifolds"
            )
        return tuple(notes)

    def describe(self) -> str:
        return f"b2={self.b2}, sigma={self.sigma}, {'spin' if self.spin else 'not spin'}"


@lru_cache(maxsize=None)
def _catalog_form(key: str, k: int | None) -> GramForm:
    if key == "k3":
        h = hyperbolic_plane()
        minus_e8 = e8_form().negated()
        return direct_sum(h, h, h, minus_e8, minus_e8)
    if key == "s2xs2":
        return hyperbolic_plane()
    if key == "cp2":
        if k is None:
            return diagonal_form((1,))
        return diagonal_form((1,) + (-1,) * k)
    raise AssertionError(key)


def catalog(name: str, parameter: int | None = None) -> ManifoldModel:
    """Built-in manifolds: "k3", "cp2", "cp2-k" (k >= 1 blow-ups), "s2xs2".

    The blow-up count can be embedded in the name ("cp2-3") or passed as
    ``parameter``.
    """
    key = str(name).strip().lower()
    k = None if parameter is None else parameter
    if key.startswith("cp2-"):
        if parameter is not None:
            raise ValidationError("give the blow-up count in the name or as parameter, not both")
        key, _, suffix = key.partition("-")
        try:
            k = int(suffix)
        except ValueError:
            raise ValidationError(f"invalid blow-up count {suffix!r} in catalog name {name!r}") from None
    if key not in ("k3", "cp2", "s2xs2"):
        raise ValidationError(f"unknown catalog name {name!r}; available: k3, cp2, cp2-k, s2xs2")
    if k is not None:
        if key != "cp2":
            raise ValidationError(f"catalog name {key!r} takes no parameter")
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ValidationError(f"blow-up count must be an integer >= 1, got {k!r}")
    return ManifoldModel.from_gram(_catalog_form(key, k))


def catalog_entries() -> tuple[dict, ...]:
    """Rows for the catalog listing, including the parametric family."""
    fixed = [("k3", catalog("k3")), ("cp2", catalog("cp2")), ("s2xs2", catalog("s2xs2"))]
    rows = [
        {"name": name, "b2": model.b2, "sigma": model.sigma, "spin": model.spin}
        for name, model in fixed
    ]
    rows.insert(1, {"name": "cp2-k", "b2": "1+k", "sigma": "1-k", "spin": False, "parameter": "k >= 1"})
    return tuple(rows)


def gram_from_json(doc) -> GramForm:
    """Build a GramForm from ``{"gram": [[...], ...]}``."""
    if not isinstance(doc, dict) or "gram" not in doc:
        raise ValidationError('expected a JSON object with a "gram" key')
    rows = doc["gram"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError('"gram" must be a list of rows')
    return GramForm(tuple(tuple(r) for r in rows))


def manifold_from_json(doc) -> ManifoldModel:
    """Build a model from ``{"gram": [[...]]}`` or ``{"b2":..,"sigma":..,"spin":..}``."""
    if not isinstance(doc, dict):
        raise ValidationError("manifold document must be a JSON object")
    if "gram" in doc:
        return ManifoldModel.from_gram(gram_from_json(doc))
    if {"b2", "sigma", "spin"} <= doc.keys():
        b2, sigma, spin = doc["b2"], doc["sigma"], doc["spin"]
        for label, value in (("b2", b2), ("sigma", sigma)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f'"{label}" must be an integer, got {value!r}')
        if not isinstance(spin, bool):
            raise ValidationError(f'"spin" must be a boolean, got {spin!r}')
        return ManifoldModel.from_invariants(b2, sigma, spin)
    raise ValidationError('manifold document needs either "gram" or all of "b2", "sigma", "spin"')
