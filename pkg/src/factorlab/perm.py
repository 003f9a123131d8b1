"""Enumerated geometric domains, orbits, randomized-then-verified
Schreier-Sims, sifting, subgroup enumeration, solvable residual.

Permutations are lists p with point^p = p[point]; composition acts left to
right: (point^(g*h)) = h[g[point]].
"""

from __future__ import annotations

import random

from .errors import (
    CapExceeded,
    DomainOverflow,
    NotFaithful,
    PointNotInDomain,
    VerificationFailed,
)
from .linalg import GroupElem, vec_frob, vec_mat

DEFAULT_DOMAIN_CAP = 1 << 20
DEFAULT_ENUM_CAP = 10 ** 6


def compose(g, h):
    return [h[x] for x in g]


def inverse(g):
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return inv


def is_identity(g):
    return all(i == x for i, x in enumerate(g))


class Domain:
    """An enumerated set of geometric objects with a GroupElem action."""

    def __init__(self, kind, frame, points, act_point, cap=DEFAULT_DOMAIN_CAP):
        if len(points) > cap:
            raise DomainOverflow(f"domain size {len(points)} exceeds cap {cap}")
        self.kind = kind
        self.frame = frame
        self.points = list(points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self._act_point = act_point

    @property
    def size(self):
        return len(self.points)

    def act(self, g: GroupElem, point):
        """Image of a domain point (by key) under g."""
        return self._act_point(g, point)

    def perm_of(self, g: GroupElem):
        act = self._act_point
        index = self.index
        out = []
        for p in self.points:
            q = act(g, p)
            j = index.get(q)
            if j is None:
                raise PointNotInDomain(f"{self.kind}: image of {p!r} left the domain")
            out.append(j)
        return out

    def perms_of(self, gens):
        return [self.perm_of(g) for g in gens]


# -- vector encodings --------------------------------------------------------


def _encode(frame, v):
    q = frame.field.q
    acc = 0
    for x in reversed(v):
        acc = acc * q + x
    return acc


def _decode(frame, code):
    q = frame.field.q
    out = []
    for _ in range(frame.n):
        out.append(code % q)
        code //= q
    return tuple(out)


def _vector_act(frame):
    def act(g, code):
        return _encode(frame, g.act(_decode(frame, code)))

    return act


def _all_vectors(frame):
    return range(frame.field.q ** frame.n)


def nonzero_vectors(frame, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    pts = [c for c in _all_vectors(frame) if c]
    return Domain("NonzeroVectors", frame, pts, _vector_act(frame), cap)


def norm_level_set(frame, value, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    """Vectors v != 0 with Q(v) = value (quadratic) or beta(v,v) = value."""
    form = frame.form
    if form.kind == "quadratic":
        val = form.quadratic
    else:
        val = lambda v: form.bilinear(v, v)
    pts = [c for c in _all_vectors(frame) if c and val(_decode(frame, c)) == value]
    kind = f"NormLevelSet({value})"
    return Domain(kind, frame, pts, _vector_act(frame), cap)


def singular_vectors(frame, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    dom = norm_level_set(frame, 0, cap)
    dom.kind = "SingularNonzeroVectors"
    return dom


def projective_points(frame, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    F = frame.field

    def normalize(v):
        lead = next(x for x in v if x)
        if lead == 1:
            return v
        c = F.inv(lead)
        return tuple(F.mul(c, x) for x in v)

    pts = sorted({_encode(frame, normalize(_decode(frame, c))) for c in _all_vectors(frame) if c})

    def act(g, code):
        return _encode(frame, normalize(g.act(_decode(frame, code))))

    return Domain("ProjectivePoints", frame, pts, act, cap)


def refined_antiflags(frame, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    """Pairs {v, W}: v nonzero, W a complementary hyperplane, encoded as
    (v, phi) with W = ker(phi) and phi(v) = 1."""
    F = frame.field

    def dot(u, w):
        acc = 0
        for a, b in zip(u, w):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        return acc

    pts = []
    for vc in _all_vectors(frame):
        if not vc:
            continue
        v = _decode(frame, vc)
        for pc in _all_vectors(frame):
            if not pc:
                continue
            if dot(v, _decode(frame, pc)) == 1:
                pts.append((vc, pc))

    def act(g, point):
        vc, pc = point
        v2 = g.act(_decode(frame, vc))
        ainv_t = g.mat.inv().transpose()
        phi2 = vec_frob(F, vec_mat(F, _decode(frame, pc), ainv_t), g.frob)
        return (_encode(frame, v2), _encode(frame, phi2))

    return Domain("RefinedAntiflags", frame, pts, act, cap)


def _form_table(frame, qfun):
    return tuple(qfun(_decode(frame, c)) for c in _all_vectors(frame) if c)


def form_orbit(frame, seed_form, gens, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    """The orbit of a quadratic form under gens of the ambient isometry group.

    Forms transform by Q^g(v) = Q(v^(g^-1))^(p^j); a form is encoded by its
    full value table on the nonzero vectors.
    """
    F = frame.field
    codes = [c for c in _all_vectors(frame) if c]
    pos = {c: i for i, c in enumerate(codes)}

    # per-element cache: the table action is a fixed index permutation
    # (v -> v g^-1) followed by an entrywise Frobenius
    pre_perms = {}

    def pre_perm(g):
        got = pre_perms.get(g)
        if got is None:
            ginv = g.inv()
            got = [pos[_encode(frame, ginv.act(_decode(frame, c)))] for c in codes]
            pre_perms[g] = got
        return got

    def table_act(g, table):
        perm = pre_perm(g)
        if g.frob % F.f == 0:
            return tuple(table[i] for i in perm)
        fr = F.frobenius
        j = g.frob
        return tuple(fr(table[i], j) for i in perm)

    seed = _form_table(frame, seed_form.quadratic)
    seen = {seed}
    queue = [seed]
    while queue:
        t = queue.pop(0)
        for g in gens:
            img = table_act(g, t)
            if img not in seen:
                if len(seen) >= cap:
                    raise DomainOverflow("form orbit exceeded the configured cap")
                seen.add(img)
                queue.append(img)
    pts = sorted(seen)
    return Domain("FormOrbit", frame, pts, table_act, cap)


def ordered_vector_pairs(frame, seed_pair, gens, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    """Orbit of an ordered vector pair (u, w) under the given generators."""

    def act(g, point):
        cu, cw = point
        return (
            _encode(frame, g.act(_decode(frame, cu))),
            _encode(frame, g.act(_decode(frame, cw))),
        )

    seed = (_encode(frame, seed_pair[0]), _encode(frame, seed_pair[1]))
    seen = {seed}
    queue = [seed]
    while queue:
        t = queue.pop(0)
        for g in gens:
            img = act(g, t)
            if img not in seen:
                if len(seen) >= cap:
                    raise DomainOverflow("pair orbit exceeded the configured cap")
                seen.add(img)
                queue.append(img)
    return Domain("OrderedVectorPairs", frame, sorted(seen), act, cap)


def unordered_vector_pairs(frame, seed_pair, gens, cap=DEFAULT_DOMAIN_CAP) -> Domain:
    """Orbit of an unordered vector pair {u, w} under the given generators."""

    def key(cu, cw):
        return (cu, cw) if cu <= cw else (cw, cu)

    def act(g, point):
        cu, cw = point
        return key(
            _encode(frame, g.act(_decode(frame, cu))),
            _encode(frame, g.act(_decode(frame, cw))),
        )

    seed = key(_encode(frame, seed_pair[0]), _encode(frame, seed_pair[1]))
    seen = {seed}
    queue = [seed]
    while queue:
        t = queue.pop(0)
        for g in gens:
            img = act(g, t)
            if img not in seen:
                if len(seen) >= cap:
                    raise DomainOverflow("pair orbit exceeded the configured cap")
                seen.add(img)
                queue.append(img)
    return Domain("UnorderedVectorPairs", frame, sorted(seen), act, cap)


def orbit(gens, start, dom: Domain):
    """The orbit of a domain point under GroupElem generators (BFS order)."""
    seen = {start}
    out = [start]
    queue = [start]
    while queue:
        p = queue.pop(0)
        for g in gens:
            img = dom.act(g, p)
            if img not in seen:
                seen.add(img)
                out.append(img)
                queue.append(img)
    return out


# -- Schreier-Sims ------------------------------------------------------------


class _Level:
    __slots__ = ("base", "gens", "orbit", "tree", "_reps", "_rep_invs")

    def __init__(self, base):
        self.base = base
        self.gens = []
        self.orbit = {}
        self.tree = {}
        self._reps = {}
        self._rep_invs = {}

    def recompute(self):
        self.orbit = {self.base: None}
        self.tree = {self.base: None}
        self._reps = {self.base: None}
        self._rep_invs = {self.base: None}
        queue = [self.base]
        while queue:
            p = queue.pop(0)
            for gi, g in enumerate(self.gens):
                img = g[p]
                if img not in self.orbit:
                    self.orbit[img] = None
                    self.tree[img] = (p, gi)
                    queue.append(img)

    def rep(self, point):
        # transversal element u with base^u = point
        got = self._reps.get(point, 0)
        if got != 0:
            return got
        p, gi = self.tree[point]
        parent = self.rep(p)
        u = list(self.gens[gi]) if parent is None else compose(parent, self.gens[gi])
        self._reps[point] = u
        return u

    def rep_inv(self, point):
        got = self._rep_invs.get(point, 0)
        if got != 0:
            return got
        u = self.rep(point)
        ui = None if u is None else inverse(u)
        self._rep_invs[point] = ui
        return ui


class StabChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, gens, n_points, seed=0, target_order=None, verify=True):
        self.n = n_points
        self.gens = [list(g) for g in gens if not is_identity(g)]
        self.seed = seed
        self.levels = []
        self._rng = random.Random(seed * 1000003 + n_points * 101 + len(self.gens))
        self._build(target_order, verify)

    # construction ---------------------------------------------------------

    def _largest_orbit_point(self, gens):
        seen = [False] * self.n
        best, best_size = None, 0
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            qi = 0
            while qi < len(comp):
                p = comp[qi]
                qi += 1
                for g in gens:
                    img = g[p]
                    if not seen[img]:
                        seen[img] = True
                        comp.append(img)
            if len(comp) > best_size:
                best, best_size = comp[0], len(comp)
        return best if best_size > 1 else None

    def _new_level(self, gens_here):
        base = self._largest_orbit_point(gens_here)
        if base is None:
            return False
        lvl = _Level(base)
        self.levels.append(lvl)
        return True

    def _add_gen(self, level_idx, g):
        """Record g as a strong generator; it fixes the first level_idx bases,
        so it belongs to the generating sets of levels 0..level_idx."""
        if level_idx == len(self.levels):
            if not self._new_level([g]):
                return False
        level_idx = min(level_idx, len(self.levels) - 1)
        g = list(g)
        for j in range(level_idx + 1):
            lvl = self.levels[j]
            lvl.gens.append(g)
            lvl.recompute()
        return True

    def _sift_index(self, g):
        """(residue, level) where level is the first failure depth."""
        cur = list(g)
        for i, lvl in enumerate(self.levels):
            img = cur[lvl.base]
            if img == lvl.base:
                continue
            if img not in lvl.orbit:
                return cur, i
            cur = compose(cur, lvl.rep_inv(img))
        return cur, len(self.levels)

    def sift(self, g):
        """The residue after sifting; identity iff g is in the group."""
        cur, _ = self._sift_index(g)
        return cur

    def contains(self, g):
        return is_identity(self.sift(g))

    def order(self) -> int:
        acc = 1
        for lvl in self.levels:
            acc *= len(lvl.orbit)
        return acc

    def _absorb(self, g):
        """Sift g and, if nontrivial, record the residue as a strong generator."""
        cur, idx = self._sift_index(g)
        if is_identity(cur):
            return False
        # the residue fixes the first idx base points; it may also fix deeper
        # ones, in which case push it down as far as it goes
        while idx < len(self.levels) and cur[self.levels[idx].base] == self.levels[idx].base:
            idx += 1
        self._add_gen(idx, cur)
        return True

    def _random_word(self):
        k = self._rng.randrange(2, 6)
        w = None
        pool = self.gens
        for _ in range(k):
            g = pool[self._rng.randrange(len(pool))]
            if self._rng.random() < 0.5:
                g = inverse(g)
            w = list(g) if w is None else compose(w, g)
        return w

    def _build(self, target_order, verify):
        if not self.gens:
            return
        for g in self.gens:
            self._absorb(g)
        if target_order is not None:
            attempts = 0
            accum = [list(g) for g in self.gens[: max(3, min(len(self.gens), 8))]]
            while self.order() != target_order:
                attempts += 1
                if attempts > 20000:
                    raise VerificationFailed(
                        f"order stalled at {self.order()}, target {target_order}"
                    )
                # product replacement step
                i = self._rng.randrange(len(accum))
                j = self._rng.randrange(len(self.gens))
                g = self.gens[j]
                if self._rng.random() < 0.5:
                    g = inverse(g)
                accum[i] = compose(accum[i], g)
                self._absorb(accum[i])
                if self.order() > target_order:
                    raise VerificationFailed(
                        f"order {self.order()} exceeds target {target_order}"
                    )
            return
        # no target: randomized warm-up, then a full deterministic pass
        for _ in range(20 + 4 * len(self.gens)):
            self._absorb(self._random_word())
        self._schreier_closure()

    def _schreier_closure(self):
        changed = True
        while changed:
            changed = False
            for i in range(len(self.levels) - 1, -1, -1):
                lvl = self.levels[i]
                for p in list(lvl.orbit):
                    up = lvl.rep(p)
                    for g in lvl.gens:
                        img = g[p]
                        word = list(g) if up is None else compose(up, g)
                        u2i = lvl.rep_inv(img)
                        if u2i is not None:
                            word = compose(word, u2i)
                        if is_identity(word):
                            continue
                        cur, idx = self._tail_sift(word, i + 1)
                        if not is_identity(cur):
                            while (
                                idx < len(self.levels)
                                and cur[self.levels[idx].base] == self.levels[idx].base
                            ):
                                idx += 1
                            self._add_gen(max(idx, i + 1), cur)
                            changed = True
            if changed:
                continue
        return

    def _tail_sift(self, g, start):
        cur = list(g)
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            img = cur[lvl.base]
            if img == lvl.base:
                continue
            if img not in lvl.orbit:
                return cur, i
            cur = compose(cur, lvl.rep_inv(img))
        return cur, len(self.levels)

    # derived data ----------------------------------------------------------

    def base_points(self):
        return [lvl.base for lvl in self.levels]

    def strong_gens(self):
        out = []
        for lvl in self.levels:
            out.extend(lvl.gens)
        return out

    def random_element(self, rng):
        g = None
        for lvl in self.levels:
            pts = list(lvl.orbit)
            u = lvl.rep(rng.choice(pts))
            if u is not None:
                g = list(u) if g is None else compose(g, u)
        return list(range(self.n)) if g is None else g

    def elements(self, cap=DEFAULT_ENUM_CAP):
        """Iterate all elements as permutation lists (transversal products)."""
        if self.order() > cap:
            raise CapExceeded(f"group order {self.order()} exceeds cap {cap}")
        ident = list(range(self.n))

        def rec(i, acc):
            if i < 0:
                yield acc
                return
            lvl = self.levels[i]
            for p in lvl.orbit:
                u = lvl.rep(p)
                if u is None:
                    nxt = acc
                elif acc is ident:
                    nxt = list(u)
                else:
                    nxt = compose(acc, u)
                yield from rec(i - 1, nxt)

        yield from rec(len(self.levels) - 1, ident)

    def coset_key(self, g):
        """Canonical key of the right coset (this group) * g."""
        cur = list(g)
        for lvl in self.levels:
            best_p, best_img = None, None
            for p in lvl.orbit:
                img = cur[p]
                if best_img is None or img < best_img:
                    best_p, best_img = p, img
            u = lvl.rep(best_p)
            if u is not None:
                cur = compose(u, cur)
        return tuple(cur)


def bsgs(gens, dom: Domain, seed=0, target_order=None) -> StabChain:
    """Certified stabilizer chain for GroupElem generators acting on dom."""
    perms = dom.perms_of(gens)
    for g, p in zip(gens, perms):
        if is_identity(p) and not g.is_identity():
            raise NotFaithful("a nontrivial generator acts trivially")
    return StabChain(perms, dom.size, seed=seed, target_order=target_order)


def enumerate_and_sift(H: StabChain, K: StabChain, cap=DEFAULT_ENUM_CAP) -> int:
    """|H meet K| by enumerating H and sifting through K's chain."""
    if H.n != K.n:
        raise ValueError("chains act on different domains")
    count = 0
    for g in H.elements(cap):
        if K.contains(g):
            count += 1
    return count


def normal_closure(seeds, conjugators, n_points, seed=0, cap=DEFAULT_ENUM_CAP):
    """Chain for the normal closure of seeds under the given conjugators."""
    gens = []
    chain = StabChain([], n_points, seed=seed)
    queue = [list(s) for s in seeds if not is_identity(s)]
    conj_pairs = [(list(c), inverse(c)) for c in conjugators]
    while queue:
        g = queue.pop()
        if chain.contains(g):
            continue
        gens.append(g)
        chain = StabChain(gens, n_points, seed=seed)
        if chain.order() > cap:
            raise CapExceeded("normal closure exceeded the enumeration cap")
        for c, ci in conj_pairs:
            queue.append(compose(ci, compose(g, c)))
    return chain


def derived_chain(gens_perms, n_points, seed=0, cap=DEFAULT_ENUM_CAP):
    """Chain for the derived subgroup of the group generated by gens_perms."""
    comms = []
    for i, a in enumerate(gens_perms):
        ai = inverse(a)
        for b in gens_perms[i + 1 :]:
            c = compose(compose(ai, inverse(b)), compose(a, b))
            if not is_identity(c):
                comms.append(c)
    return normal_closure(comms, gens_perms, n_points, seed=seed, cap=cap)


def solvable_residual(gens, dom: Domain, seed=0, cap=DEFAULT_ENUM_CAP) -> StabChain:
    """Chain for the last term of the derived series of <gens>."""
    perms = dom.perms_of(gens)
    chain = StabChain(perms, dom.size, seed=seed)
    cur_gens = perms
    cur_order = chain.order()
    while True:
        nxt = derived_chain(cur_gens, dom.size, seed=seed, cap=cap)
        if nxt.order() == cur_order:
            return nxt
        if nxt.order() == 1:
            return nxt
        cur_gens = nxt.strong_gens()
        cur_order = nxt.order()
