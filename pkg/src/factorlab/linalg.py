"""Matrices and semilinear maps over a FieldSpec; bilinear/quadratic/hermitian
forms; standard frames; isometry and Omega-membership tests; reflections.

Vectors are row vectors acted on the right: v |-> (v^(phi^j)) * M.
"""

from __future__ import annotations

from .errors import (
    DecompositionFailure,
    DimensionMismatch,
    FieldMismatch,
    NotAnIsometry,
    SingularVector,
)
from .gf import FieldSpec, find_irreducible_mu


class MatF:
    """A square matrix over a FieldSpec, stored as a tuple of row tuples."""

    __slots__ = ("owner", "n", "rows", "_hash")

    def __init__(self, owner: FieldSpec, rows):
        self.owner = owner
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise DimensionMismatch("matrix is not square")
        self._hash = None

    @classmethod
    def identity(cls, owner, n):
        return cls(owner, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __eq__(self, other):
        return (
            isinstance(other, MatF)
            and self.owner.key == other.owner.key
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.owner.key, self.rows))
        return self._hash

    def __repr__(self):
        return f"MatF({self.owner}, {self.rows})"

    def mul(self, other: "MatF") -> "MatF":
        if self.owner.key != other.owner.key:
            raise FieldMismatch("matrix product across different fields")
        F = self.owner
        bt = tuple(zip(*other.rows))
        mul, add = F.mul, F.add
        out = []
        for row in self.rows:
            new = []
            for col in bt:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                new.append(acc)
            out.append(tuple(new))
        return MatF(F, out)

    def transpose(self) -> "MatF":
        return MatF(self.owner, tuple(zip(*self.rows)))

    def map_entries(self, fn) -> "MatF":
        return MatF(self.owner, tuple(tuple(fn(x) for x in row) for row in self.rows))

    def frob(self, j: int) -> "MatF":
        if j % self.owner.f == 0:
            return self
        F = self.owner
        return self.map_entries(lambda x: F.frobenius(x, j))

    def inv(self) -> "MatF":
        F, n = self.owner, self.n
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise DimensionMismatch("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            s = F.inv(aug[col][col])
            if s != 1:
                aug[col] = [F.mul(s, x) for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(aug[r], aug[col])]
        return MatF(F, tuple(tuple(row[n:]) for row in aug))

    def det(self):
        F, n = self.owner, self.n
        m = [list(r) for r in self.rows]
        det = 1
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = F.neg(det)
            det = F.mul(det, m[col][col])
            inv = F.inv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col]:
                    c = F.mul(m[r][col], inv)
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[col])]
        return det

    def rank(self) -> int:
        F = self.owner
        m = [list(r) for r in self.rows]
        rank, col = 0, 0
        n = self.n
        while rank < n and col < n:
            piv = next((r for r in range(rank, n) if m[r][col]), None)
            if piv is None:
                col += 1
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = F.inv(m[rank][col])
            for r in range(rank + 1, n):
                if m[r][col]:
                    c = F.mul(m[r][col], inv)
                    m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[rank])]
            rank += 1
            col += 1
        return rank


def vec_frob(F: FieldSpec, v, j: int):
    if j % F.f == 0:
        return v
    return tuple(F.frobenius(x, j) for x in v)


def vec_mat(F: FieldSpec, v, M: MatF):
    mul, add = F.mul, F.add
    out = []
    for col in zip(*M.rows):
        acc = 0
        for a, b in zip(v, col):
            if a and b:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_add(F, u, v):
    return tuple(F.add(a, b) for a, b in zip(u, v))


def vec_scale(F, c, v):
    return tuple(F.mul(c, x) for x in v)


class GroupElem:
    """A semilinear transformation: Frobenius power applied first, then the matrix.

    Composition law: (A, i) * (B, j) = (A^(sigma^j) B, i + j mod f).
    """

    __slots__ = ("mat", "frob", "_hash")

    def __init__(self, mat: MatF, frob: int = 0):
        self.mat = mat
        self.frob = frob % mat.owner.f
        self._hash = None

    @property
    def owner(self):
        return self.mat.owner

    @property
    def n(self):
        return self.mat.n

    @classmethod
    def identity(cls, owner, n):
        return cls(MatF.identity(owner, n), 0)

    def is_identity(self):
        return self.frob == 0 and self.mat == MatF.identity(self.owner, self.n)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElem)
            and self.frob == other.frob
            and self.mat == other.mat
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.frob, self.mat))
        return self._hash

    def __repr__(self):
        return f"GroupElem(frob={self.frob}, mat={self.mat.rows})"

    def mul(self, other: "GroupElem") -> "GroupElem":
        return GroupElem(self.mat.frob(other.frob).mul(other.mat), self.frob + other.frob)

    def __mul__(self, other):
        return self.mul(other)

    def inv(self) -> "GroupElem":
        return GroupElem(self.mat.frob(-self.frob).inv(), -self.frob)

    def act(self, v):
        return vec_mat(self.owner, vec_frob(self.owner, v, self.frob), self.mat)

    def serialize(self):
        F = self.owner
        return {
            "frob": self.frob,
            "matrix": [[list(F.digits(x)) for x in row] for row in self.mat.rows],
        }

    @classmethod
    def deserialize(cls, owner: FieldSpec, doc) -> "GroupElem":
        rows = tuple(
            tuple(owner.from_digits(cell) for cell in row) for row in doc["matrix"]
        )
        return cls(MatF(owner, rows), doc.get("frob", 0))


class FormSpec:
    """A bilinear, quadratic or hermitian form on F^n.

    kind: "alternating" | "symmetric" | "quadratic" | "hermitian".
    For quadratic forms, qdiag holds Q(basis_i) and gram the polarization.
    Hermitian forms live over GF(q^2) and conjugate the second argument.
    """

    __slots__ = ("kind", "gram", "qdiag", "sign")

    def __init__(self, kind, gram: MatF, qdiag=None, sign=None):
        self.kind = kind
        self.gram = gram
        self.qdiag = tuple(qdiag) if qdiag is not None else None
        self.sign = sign
        if kind == "quadratic" and self.qdiag is None:
            raise ValueError("quadratic form needs qdiag")

    @property
    def owner(self):
        return self.gram.owner

    @property
    def n(self):
        return self.gram.n

    def conj(self, x):
        # the order-2 field automorphism for hermitian forms
        return self.owner.frobenius(x, self.owner.f // 2)

    def bilinear(self, u, v):
        F = self.owner
        if len(u) != self.n or len(v) != self.n:
            raise DimensionMismatch("vector length does not match the form")
        if self.kind == "hermitian":
            v = tuple(self.conj(x) for x in v)
        acc = 0
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.gram.rows[i]
            for j, b in enumerate(v):
                if b and row[j]:
                    acc = F.add(acc, F.mul(a, F.mul(row[j], b)))
        return acc

    def quadratic(self, v):
        if self.kind != "quadratic":
            raise ValueError("not a quadratic form")
        F = self.owner
        if len(v) != self.n:
            raise DimensionMismatch("vector length does not match the form")
        acc = 0
        for i, a in enumerate(v):
            if a:
                acc = F.add(acc, F.mul(self.qdiag[i], F.mul(a, a)))
                row = self.gram.rows[i]
                for j in range(i + 1, self.n):
                    b = v[j]
                    if b and row[j]:
                        acc = F.add(acc, F.mul(a, F.mul(row[j], b)))
        return acc

    def eval(self, u, v=None):
        if self.kind == "quadratic" and v is None:
            return self.quadratic(u)
        if v is None:
            raise DimensionMismatch("bilinear form needs two arguments")
        return self.bilinear(u, v)


def form_eval(form: FormSpec, u, v=None):
    return form.eval(u, v)


class SpaceFrame:
    """A space with a form given on a standard basis.

    Basis conventions (always the unit coordinate vectors, in order):
      symplectic / plus / hermitian even: e1, f1, ..., em, fm;
      hermitian odd:                      e1, f1, ..., el, fl, D;
      quadratic odd (q odd):              e1, f1, ..., em, fm, d;
      quadratic minus:                    e1, f1, ..., em, fm with
                                          Q(em) = 1, Q(fm) = mu.
    """

    __slots__ = ("field", "n", "form", "labels", "mu")

    def __init__(self, field, n, form, labels, mu=None):
        self.field = field
        self.n = n
        self.form = form
        self.labels = tuple(labels)
        self.mu = mu

    def basis(self, i):
        return tuple(1 if j == i else 0 for j in range(self.n))

    def basis_index(self, label):
        return self.labels.index(label)

    @classmethod
    def symplectic(cls, field: FieldSpec, m: int) -> "SpaceFrame":
        n = 2 * m
        rows = [[0] * n for _ in range(n)]
        for i in range(m):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = field.neg(1)
        labels = [x for i in range(1, m + 1) for x in (f"e{i}", f"f{i}")]
        return cls(field, n, FormSpec("alternating", MatF(field, rows)), labels)

    @classmethod
    def hermitian(cls, field: FieldSpec, n: int) -> "SpaceFrame":
        """Unitary space of dimension n over GF(q^2); field must be GF(q^2)."""
        if field.f % 2:
            raise ValueError("hermitian frame needs a field GF(q^2)")
        m = n // 2
        rows = [[0] * n for _ in range(n)]
        for i in range(m):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = 1
        labels = [x for i in range(1, m + 1) for x in (f"e{i}", f"f{i}")]
        if n % 2:
            rows[n - 1][n - 1] = 1
            labels.append("d")
        return cls(field, n, FormSpec("hermitian", MatF(field, rows)), labels)

    @classmethod
    def quadratic(cls, field: FieldSpec, n: int, sign: str) -> "SpaceFrame":
        mu = None
        if sign == "odd":
            if field.p == 2:
                raise ValueError("odd-dimensional orthogonal frames need odd q")
            m = (n - 1) // 2
        else:
            m = n // 2
        rows = [[0] * n for _ in range(n)]
        qdiag = [0] * n
        labels = [x for i in range(1, m + 1) for x in (f"e{i}", f"f{i}")]
        for i in range(m):
            rows[2 * i][2 * i + 1] = 1
            rows[2 * i + 1][2 * i] = 1
        if sign == "odd":
            qdiag[n - 1] = 1
            rows[n - 1][n - 1] = field.add(1, 1)
            labels.append("d")
        elif sign == "-":
            mu = find_irreducible_mu(field)
            qdiag[n - 2] = 1
            qdiag[n - 1] = mu
            rows[n - 2][n - 2] = field.add(1, 1)
            rows[n - 1][n - 1] = field.mul(field.add(1, 1), mu)
        elif sign != "+":
            raise ValueError(f"unknown sign {sign!r}")
        form = FormSpec("quadratic", MatF(field, rows), qdiag, sign)
        return cls(field, n, form, labels, mu)


def is_isometry(g: GroupElem, form: FormSpec) -> bool:
    """True iff g preserves the form up to the Frobenius twist of g."""
    F = form.owner
    n = form.n
    if g.n != n:
        raise DimensionMismatch("element and form dimensions differ")
    j = g.frob
    basis = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    images = [g.act(b) for b in basis]
    for i in range(n):
        for k in range(i, n):
            expect = F.frobenius(form.bilinear(basis[i], basis[k]), j)
            if form.bilinear(images[i], images[k]) != expect:
                return False
        if form.kind == "quadratic":
            if form.quadratic(images[i]) != F.frobenius(form.qdiag[i], j):
                return False
    return True


def reflection(frame: SpaceFrame, w) -> GroupElem:
    """The reflection r_w: v |-> v - (beta(v,w)/Q(w)) w, for Q(w) != 0."""
    form = frame.form
    F = frame.field
    qw = form.quadratic(w)
    if qw == 0:
        raise SingularVector("reflection in a singular vector")
    inv_qw = F.inv(qw)
    rows = []
    for i in range(frame.n):
        b = frame.basis(i)
        c = F.mul(form.bilinear(b, w), inv_qw)
        rows.append(tuple(F.sub(x, F.mul(c, y)) for x, y in zip(b, w)))
    return GroupElem(MatF(F, rows), 0)


def dickson_invariant(g, form: FormSpec) -> int:
    """rank(g - 1) mod 2, for isometries in characteristic 2."""
    mat = g.mat if isinstance(g, GroupElem) else g
    F = form.owner
    if F.p != 2:
        raise ValueError("Dickson invariant is a characteristic-2 notion")
    if not is_isometry(GroupElem(mat, 0), form):
        raise NotAnIsometry("Dickson invariant of a non-isometry")
    delta = MatF(
        F,
        tuple(
            tuple(F.sub(x, 1 if i == j else 0) for j, x in enumerate(row))
            for i, row in enumerate(mat.rows)
        ),
    )
    return delta.rank() % 2


def is_square(F: FieldSpec, x) -> bool:
    if x == 0:
        return True
    if F.p == 2:
        return True
    return F.pow(x, (F.q - 1) // 2) == 1


def spinor_norm_class(g, frame: SpaceFrame) -> str:
    """'square' or 'nonsquare': the spinor norm of an isometry, odd characteristic.

    Wall-style greedy peeling into reflections; the class is the product of the
    Q(w_i) modulo squares.
    """
    mat = g.mat if isinstance(g, GroupElem) else g
    F = frame.field
    if F.p == 2:
        raise ValueError("spinor norm is an odd-characteristic notion")
    form = frame.form
    if not is_isometry(GroupElem(mat, 0), form):
        raise NotAnIsometry("spinor norm of a non-isometry")
    n = frame.n
    ident = MatF.identity(F, n)
    # odd-order elements lie in the kernel of every map onto a 2-group
    k = 0
    power = mat
    while k < 512:
        k += 1
        if power == ident:
            if k % 2:
                return "square"
            break
        power = power.mul(mat)
    acc = 1
    cur = mat
    guard = 0
    candidates = None
    while cur != ident:
        guard += 1
        if guard > 8 * n + 16:
            raise DecompositionFailure("reflection peeling did not terminate")
        moved = None
        for i in range(n):
            b = frame.basis(i)
            img = vec_mat(F, b, cur)
            if img == b:
                continue
            w = tuple(F.sub(x, y) for x, y in zip(img, b))
            if form.quadratic(w) != 0:
                moved = w
                break
        if moved is not None:
            acc = F.mul(acc, form.quadratic(moved))
            cur = cur.mul(reflection(frame, moved).mat)
            continue
        # degenerate step: find any nonsingular u whose reflection unsticks things
        if candidates is None:
            candidates = _nonsingular_candidates(frame)
        done = False
        for u in candidates:
            qu = form.quadratic(u)
            nxt = cur.mul(reflection(frame, u).mat)
            for i in range(n):
                b = frame.basis(i)
                img = vec_mat(F, b, nxt)
                if img == b:
                    continue
                w = tuple(F.sub(x, y) for x, y in zip(img, b))
                if form.quadratic(w) != 0:
                    acc = F.mul(acc, qu)
                    cur = nxt
                    done = True
                    break
            if done:
                break
        if not done:
            raise DecompositionFailure("no valid reflection step")
    return "square" if is_square(F, acc) else "nonsquare"


def _nonsingular_candidates(frame):
    F = frame.field
    n = frame.n
    out = []
    units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    for i, u in enumerate(units):
        if frame.form.quadratic(u) != 0:
            out.append(u)
    for i in range(n):
        for j in range(i + 1, n):
            for c in F.elements():
                if not c:
                    continue
                v = list(units[i])
                v[j] = c
                v = tuple(v)
                if frame.form.quadratic(v) != 0:
                    out.append(v)
    return out


def in_omega(g, frame: SpaceFrame) -> bool:
    """Membership in Omega(V, Q) for an isometry of the frame's quadratic form."""
    mat = g.mat if isinstance(g, GroupElem) else g
    F = frame.field
    if F.p == 2:
        return dickson_invariant(mat, frame.form) == 0
    if mat.det() != 1:
        return False
    return spinor_norm_class(mat, frame) == "square"


# -- form standardization (used when embedding blown-up subgroups) ---------

def gram_of(F: FieldSpec, n, bil):
    return MatF(F, tuple(tuple(bil(i, j) for j in range(n)) for i in range(n)))


def symplectic_change_of_basis(field: FieldSpec, gram: MatF) -> MatF:
    """P whose rows are a standard symplectic basis for the alternating gram."""
    n = gram.n
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    def bil(u, v):
        acc = 0
        for i, a in enumerate(u):
            if a:
                row = gram.rows[i]
                for j, b in enumerate(v):
                    if b and row[j]:
                        acc = field.add(acc, field.mul(a, field.mul(row[j], b)))
        return acc

    pool = list(basis)
    new_basis = []
    while pool:
        v = pool.pop(0)
        w = next((u for u in pool if bil(v, u) != 0), None)
        if w is None:
            raise DecompositionFailure("degenerate alternating form")
        pool.remove(w)
        w = vec_scale(field, field.inv(bil(v, w)), w)
        new_basis.extend([v, w])
        reduced = []
        for u in pool:
            u1 = vec_add(field, u, vec_scale(field, field.neg(bil(u, w)), v))
            u1 = vec_add(field, u1, vec_scale(field, bil(u1, v), w))
            if any(u1):
                reduced.append(u1)
        pool = reduced
    if len(new_basis) != n:
        raise DecompositionFailure("alternating form is degenerate")
    return MatF(field, new_basis)


def _independent_subset(field, vectors):
    basis, echelon = [], []
    for v in vectors:
        red = list(v)
        for pivot, row in echelon:
            if red[pivot]:
                c = field.mul(red[pivot], field.inv(row[pivot]))
                red = [field.sub(x, field.mul(c, y)) for x, y in zip(red, row)]
        piv = next((i for i, x in enumerate(red) if x), None)
        if piv is not None:
            basis.append(v)
            echelon.append((piv, red))
    return basis


def quadratic_change_of_basis(field: FieldSpec, qfun, n: int, target_mu=None):
    """Split off hyperbolic planes; return (P, sign) with rows a standard basis.

    qfun maps a length-n vector to its form value.  For even n the sign is
    '+' or '-'; a minus-type tail is normalized to Q(e_m)=1, Q(f_m)=target_mu.
    """

    def bil(u, v):
        return field.sub(
            field.sub(qfun(vec_add(field, u, v)), qfun(u)), qfun(v)
        )

    def hyperbolic_partner(pool, v):
        w = next((u for u in pool if bil(v, u) != 0), None)
        if w is None:
            raise DecompositionFailure("degenerate quadratic form")
        w = vec_scale(field, field.inv(bil(v, w)), w)
        return vec_add(field, w, vec_scale(field, field.neg(qfun(w)), v))

    def reduce_off(pool, v, w):
        out = []
        for u in pool:
            u1 = vec_add(field, u, vec_scale(field, field.neg(bil(u, w)), v))
            u1 = vec_add(field, u1, vec_scale(field, field.neg(bil(u1, v)), w))
            if any(u1):
                out.append(u1)
        return _independent_subset(field, out)

    pool = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    new_basis = []
    while len(pool) > 2:
        v = _find_singular(field, qfun, pool)
        if v is None:
            raise DecompositionFailure("no singular vector in dimension > 2")
        w = hyperbolic_partner(pool, v)
        new_basis.extend([v, w])
        pool = reduce_off(pool, v, w)
    if len(pool) == 1:
        d = pool[0]
        s = qfun(d)
        if s == 0:
            raise DecompositionFailure("degenerate tail")
        c = _sqrt_or_none(field, field.inv(s))
        if c is None:
            raise DecompositionFailure("odd-dimensional tail needs rescaling")
        new_basis.append(vec_scale(field, c, d))
        return MatF(field, new_basis), "odd"
    if len(pool) == 2:
        v = _find_singular(field, qfun, pool)
        if v is None:
            em, fm = _anisotropic_pair(field, qfun, bil, pool, target_mu)
            new_basis.extend([em, fm])
            return MatF(field, new_basis), "-"
        w = hyperbolic_partner(pool, v)
        new_basis.extend([v, w])
        return MatF(field, new_basis), "+"
    if not pool:
        return MatF(field, new_basis), "+"
    raise DecompositionFailure("unexpected tail dimension")


def _find_singular(field, qfun, pool):
    """A nonzero singular vector in the span of pool, or None (span anisotropic)."""
    from itertools import combinations

    def bil(u, v):
        return field.sub(field.sub(qfun(vec_add(field, u, v)), qfun(u)), qfun(v))

    for u in pool:
        if qfun(u) == 0:
            return u
    # scan every coordinate plane
    for a, b in combinations(pool, 2):
        for c in field.elements():
            if c:
                v = vec_add(field, a, vec_scale(field, c, b))
                if qfun(v) == 0:
                    return v
    if len(pool) < 3:
        return None
    # every pool plane is anisotropic; take one, project a third vector onto
    # its perp, and solve Q(z + y) = 0 with z in the plane (Q is surjective
    # on an anisotropic plane, so this always succeeds)
    for a, b in combinations(pool, 2):
        baa, bab, bbb = bil(a, a), bil(a, b), bil(b, b)
        det = field.sub(field.mul(baa, bbb), field.mul(bab, bab))
        if det == 0:
            continue
        dinv = field.inv(det)
        for u in pool:
            if u is a or u is b:
                continue
            bua, bub = bil(u, a), bil(u, b)
            alpha = field.mul(dinv, field.sub(field.mul(bbb, bua), field.mul(bab, bub)))
            beta = field.mul(dinv, field.sub(field.mul(baa, bub), field.mul(bab, bua)))
            y = vec_add(field, u, vec_scale(field, field.neg(alpha), a))
            y = vec_add(field, y, vec_scale(field, field.neg(beta), b))
            if not any(y):
                continue
            for ca in field.elements():
                for cb in field.elements():
                    z = vec_add(field, vec_scale(field, ca, a), vec_scale(field, cb, b))
                    v = vec_add(field, z, y)
                    if qfun(v) == 0:
                        return v
    return None


def _sqrt_or_none(field, x):
    for c in field.elements():
        if field.mul(c, c) == x:
            return c
    return None


def _anisotropic_pair(field, qfun, bil, pool, target_mu):
    u0, u1 = pool
    q = field.q
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            em = vec_add(field, vec_scale(field, a, u0), vec_scale(field, b, u1))
            if qfun(em) != 1:
                continue
            for c in range(q):
                for d in range(q):
                    if c == 0 and d == 0:
                        continue
                    fm = vec_add(field, vec_scale(field, c, u0), vec_scale(field, d, u1))
                    if bil(em, fm) == 1 and qfun(fm) == target_mu:
                        return em, fm
    raise DecompositionFailure("cannot normalize anisotropic plane")
