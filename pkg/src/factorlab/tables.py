"""The machine-readable database of classification-table rows: loader with a
manifest check, constraint evaluation, and enumeration of admissible bindings
(including the derived exponents c and d and their branch conventions).
"""

from __future__ import annotations

import ast
import itertools
import json
import math
import os
from dataclasses import dataclass, field

from .errors import ManifestMismatch, NonIntegralQuotient, UnboundSymbol
from .gf import is_prime_power
from .shapes import order_of, parse_shape

DEFAULT_ORDER_CAP = 10 ** 40

_DB_ENV = "FACTORLAB_DB"


@dataclass
class FactorizationRecord:
    id: str
    table: int
    row: int
    sub: str | None
    family: str
    shapes: dict          # raw strings for G, H, K, int
    asts: dict            # parsed shapes
    params: list
    where: list
    derived: dict
    ref: str
    tier_b: dict | None
    remarks: str

    def shape(self, key):
        return self.asts[key]


@dataclass
class ConcreteCase:
    record: FactorizationRecord
    bindings: dict
    orders: dict = field(default_factory=dict)

    @property
    def id(self):
        binding_str = ",".join(f"{k}={v}" for k, v in sorted(self.bindings.items()))
        return f"{self.record.id}[{binding_str}]" if binding_str else self.record.id


def default_db_path():
    env = os.environ.get(_DB_ENV)
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data", "tables_db.json")


def load_db(path=None):
    """Load and manifest-check the DB; returns the record list."""
    with open(path or default_db_path()) as fh:
        doc = json.load(fh)
    records = []
    seen = set()
    for raw in doc["records"]:
        rid = raw["id"]
        if rid in seen:
            raise ManifestMismatch(f"duplicate record id {rid}")
        seen.add(rid)
        asts = {k: parse_shape(s) for k, s in raw["shapes"].items()}
        records.append(FactorizationRecord(
            id=rid, table=raw["table"], row=raw["row"], sub=raw.get("sub"),
            family=raw["family"], shapes=raw["shapes"], asts=asts,
            params=raw.get("params", []), where=raw.get("where", []),
            derived=raw.get("derived", {}), ref=raw.get("ref", ""),
            tier_b=raw.get("tier_b"), remarks=raw.get("remarks", ""),
        ))
    man = doc.get("manifest", {})
    if man.get("records") != len(records):
        raise ManifestMismatch(
            f"manifest count {man.get('records')} != {len(records)} records")
    per_table = {str(t): sum(1 for r in records if r.table == t) for t in range(1, 10)}
    if man.get("per_table") != per_table:
        raise ManifestMismatch("per-table record counts differ from the manifest")
    refs = sorted({r.ref for r in records if r.ref})
    if man.get("refs") != refs:
        raise ManifestMismatch("reference-label set differs from the manifest")
    return records


def export_db(path=None):
    with open(path or default_db_path()) as fh:
        return fh.read()


# -- constraint evaluation ----------------------------------------------------

_ALLOWED_CALLS = {"odd", "even", "gcd", "min", "max"}


def eval_constraint(src: str, bindings: dict) -> bool:
    """Evaluate a constraint string; division is exact (inexact => False)."""
    try:
        tree = ast.parse(src.replace("^", "**"), mode="eval")
        return bool(_c_eval(tree.body, bindings))
    except NonIntegralQuotient:
        return False


def _c_eval(node, bnd):
    if isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, bool)):
            raise ValueError(f"bad constant {node.value!r}")
        return node.value
    if isinstance(node, ast.Name):
        try:
            return bnd[node.id]
        except KeyError:
            raise UnboundSymbol(node.id) from None
    if isinstance(node, ast.BinOp):
        l, r = _c_eval(node.left, bnd), _c_eval(node.right, bnd)
        if isinstance(node.op, ast.Add):
            return l + r
        if isinstance(node.op, ast.Sub):
            return l - r
        if isinstance(node.op, ast.Mult):
            return l * r
        if isinstance(node.op, ast.Pow):
            return l ** r
        if isinstance(node.op, ast.Mod):
            return l % r
        if isinstance(node.op, ast.Div):
            if r == 0 or l % r:
                raise NonIntegralQuotient(f"{l}/{r}")
            return l // r
        raise ValueError(f"operator {node.op} not allowed")
    if isinstance(node, ast.BoolOp):
        if isinstance(node.op, ast.And):
            return all(_c_eval(v, bnd) for v in node.values)
        return any(_c_eval(v, bnd) for v in node.values)
    if isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.Not):
            return not _c_eval(node.operand, bnd)
        if isinstance(node.op, ast.USub):
            return -_c_eval(node.operand, bnd)
        raise ValueError("unary operator not allowed")
    if isinstance(node, ast.Compare):
        left = _c_eval(node.left, bnd)
        for op, rhs in zip(node.ops, node.comparators):
            right = _c_eval(rhs, bnd)
            ok = {
                ast.Eq: left == right, ast.NotEq: left != right,
                ast.Lt: left < right, ast.LtE: left <= right,
                ast.Gt: left > right, ast.GtE: left >= right,
            }[type(op)]
            if not ok:
                return False
            left = right
        return True
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _ALLOWED_CALLS:
            raise ValueError("call not allowed")
        args = [_c_eval(a, bnd) for a in node.args]
        name = node.func.id
        if name == "odd":
            return args[0] % 2 == 1
        if name == "even":
            return args[0] % 2 == 0
        if name == "gcd":
            return math.gcd(*args)
        if name == "min":
            return min(args)
        return max(args)
    raise ValueError(f"node {type(node).__name__} not allowed")


# -- derived-symbol machinery --------------------------------------------------

DERIVED_DOC = {
    "linear_c": "c = ab - b, except c = 2 at (q,a,b) = (2,4,1)",
    "sp_d": "d = 2ab - b, except d = 2 at (a,b,q) = (1,3,2)",
    "two_part_b": "b2 = the 2-part of b",
    "unitary_cI": "c = (2|I|-1)a^2 b if (b+1)/2 in I else 2|I| a^2 b, over "
                  "nonempty I in {1..ceil(b/2)} with gcd(2I-1, b) = 1",
    "unitary_cI_a6": "as unitary_cI with a = 6",
    "plus_cIE:1": "c = log_q|E| + ((2|I|-1)a^2 b/2 if b/2 in I else |I| a^2 b), "
                  "E in {0, full wedge part}, I in {1..floor(b/2)} with gcd(I, b) = 1",
    "plus_cIE:2": "as plus_cIE:1 with gcd(I, b) = 2 (b even)",
    "plus_cIE_a6:1": "as plus_cIE:1 with a = 6",
    "plus_cIE_a6:2": "as plus_cIE:2 with a = 6",
    "sp_cE_full_I": "c = ba(a+1)/2 + ((2|I|-1)a^2 b/2 if b/2 in I else |I| a^2 b), "
                    "I free in {1..floor(b/2)}",
    "sp_cE_full_I_a6": "as sp_cE_full_I with a = 6",
    "sp_cIE_prop:1": "c = log_q|E| + dim of the I-part, E in {0, wedge part}, "
                     "gcd(I, b) = 1",
    "sp_cIE_prop:2": "as sp_cIE_prop:1 with gcd(I, b) = 2 (b even)",
    "sp_cIE_prop_a6:1": "as sp_cIE_prop:1 with a = 6",
    "sp_cIE_prop_a6:2": "as sp_cIE_prop:2 with a = 6",
}


def two_part(b):
    out = 1
    while b % 2 == 0:
        out *= 2
        b //= 2
    return out


def _unitary_c_values(a, b):
    """Eq-(4.4)-style exponents: I in {1..ceil(b/2)}, nonempty,
    gcd(2I-1, b) = 1; c = (2|I|-1) a^2 b or 2|I| a^2 b."""
    out = []
    ceil_half = (b + 1) // 2
    special = (b + 1) // 2 if b % 2 else None  # i with 2i-1 = b requires b odd
    for k in range(1, ceil_half + 1):
        for I in itertools.combinations(range(1, ceil_half + 1), k):
            if math.gcd(*[2 * i - 1 for i in I], b) != 1:
                continue
            has_special = b % 2 == 1 and special in I
            c = (2 * k - 1) * a * a * b if has_special else 2 * k * a * a * b
            if c not in out:
                out.append(c)
    return out


def _plus_c_values(a, b, g):
    """Eq-(7.4)-style exponents: I in {1..floor(b/2)} with gcd(I, b) = g,
    E in {0, full wedge part}; c = log|E| + (2|I|-1)a^2 b/2 or |I| a^2 b."""
    out = []
    half = b // 2
    e_options = [0, b * a * (a - 1) // 2]
    for k in range(0, half + 1):
        for I in itertools.combinations(range(1, half + 1), k):
            got = math.gcd(*I, b) if I else b
            if got != g:
                continue
            if b % 2 == 0 and b // 2 in I:
                dim = (2 * k - 1) * a * a * b // 2
            else:
                dim = k * a * a * b
            for e in e_options:
                c = e + dim
                if c not in out:
                    out.append(c)
    return sorted(out)


def _sp_c_values(a, b, g=None, full_radical=True):
    """Eq-(8.2)-style exponents.  full_radical: E is the whole symmetric part
    and I is free; otherwise E in {0, wedge part} and gcd(I, b) = g."""
    out = []
    half = b // 2
    if full_radical:
        e_options = [b * a * (a + 1) // 2]
    else:
        e_options = [0, b * a * (a - 1) // 2]
    for k in range(0, half + 1):
        for I in itertools.combinations(range(1, half + 1), k):
            if not full_radical:
                got = math.gcd(*I, b) if I else b
                if got != g:
                    continue
            if b % 2 == 0 and b // 2 in I:
                dim = (2 * k - 1) * a * a * b // 2
            else:
                dim = k * a * a * b
            for e in e_options:
                c = e + dim
                if c not in out:
                    out.append(c)
    return sorted(out)


def _derived_expansions(record, base):
    """List of dicts of derived symbols for one base binding."""
    singles = {}
    c_lists = None
    for name, kind in record.derived.items():
        if kind == "linear_c":
            a, b, q = base["a"], base["b"], base["q"]
            singles[name] = 2 if (q, a, b) == (2, 4, 1) else a * b - b
        elif kind == "sp_d":
            a, b, q = base["a"], base["b"], base["q"]
            singles[name] = 2 if (a, b, q) == (1, 3, 2) else 2 * a * b - b
        elif kind == "two_part_b":
            singles[name] = two_part(base["b"])
        elif kind == "unitary_cI":
            c_lists = _unitary_c_values(base["a"], base["b"])
        elif kind == "unitary_cI_a6":
            c_lists = _unitary_c_values(6, base["b"])
        elif kind.startswith("plus_cIE_a6:"):
            c_lists = _plus_c_values(6, base["b"], int(kind.split(":")[1]))
        elif kind.startswith("plus_cIE:"):
            c_lists = _plus_c_values(base["a"], base["b"], int(kind.split(":")[1]))
        elif kind == "sp_cE_full_I":
            c_lists = _sp_c_values(base["a"], base["b"], full_radical=True)
        elif kind == "sp_cE_full_I_a6":
            c_lists = _sp_c_values(6, base["b"], full_radical=True)
        elif kind.startswith("sp_cIE_prop_a6:"):
            c_lists = _sp_c_values(6, base["b"], g=int(kind.split(":")[1]), full_radical=False)
        elif kind.startswith("sp_cIE_prop:"):
            c_lists = _sp_c_values(base["a"], base["b"], g=int(kind.split(":")[1]),
                                   full_radical=False)
        else:
            raise ValueError(f"unknown derived kind {kind!r}")
    if c_lists is None:
        return [singles]
    return [{**singles, "c": c} for c in c_lists]


# -- binding enumeration --------------------------------------------------------


def _prime_powers(limit=2 ** 40):
    q = 2
    while q <= limit:
        if is_prime_power(q):
            yield q
        q += 1


def _param_values(p):
    if "fixed" in p:
        yield p["fixed"]
        return
    if p.get("pp"):
        for q in _prime_powers():
            if p.get("even") and q % 2:
                continue
            if p.get("odd") and q % 2 == 0:
                continue
            if q < p.get("min", 2):
                continue
            yield q
        return
    v = p["min"]
    step = 2 if (p.get("even") or p.get("odd")) else 1
    while True:
        yield v
        v += step


def _min_value(p):
    if "fixed" in p:
        return p["fixed"]
    if p.get("pp"):
        if p.get("odd"):
            return max(3, p.get("min", 2))
        return p.get("min", 2)
    return p["min"]


def iter_admissible_bindings(record, cap=DEFAULT_ORDER_CAP):
    """Yield bindings satisfying the record's constraints with |G0| <= cap,
    in deterministic order (ascending parameters); derived structural
    parameters are expanded over their legal ranges."""
    if cap is None:
        cap = math.inf
    params = record.params
    g_shape = record.shape("G")
    wheres = [(w, _constraint_symbols(w)) for w in record.where]

    def complete_min(partial, start):
        filled = dict(partial)
        for p in params[start:]:
            if "expr" in p:
                filled[p["n"]] = _expr_value(p["expr"], filled)
            else:
                filled[p["n"]] = _min_value(p)
        return filled

    def g_order(bnd):
        return order_of(g_shape, bnd)

    def rec_enum(i, partial):
        if i == len(params):
            yield from finalize(dict(partial))
            return
        p = params[i]
        if "expr" in p:
            partial[p["n"]] = _expr_value(p["expr"], partial)
            yield from rec_enum(i + 1, partial)
            del partial[p["n"]]
            return
        for v in _param_values(p):
            partial[p["n"]] = v
            if g_order(complete_min(partial, i + 1)) > cap:
                del partial[p["n"]]
                break
            # constraints already decidable from the bound prefix prune the
            # deeper loops (otherwise a dead branch scans prime powers up to
            # the order cap)
            bound = set(partial)
            if all(eval_constraint(w, partial)
                   for w, syms in wheres if syms <= bound):
                yield from rec_enum(i + 1, partial)
        partial.pop(p["n"], None)

    def finalize(base):
        if g_order(base) > cap:
            return
        for extra in _derived_expansions(record, base):
            bnd = {**base, **extra}
            if not all(eval_constraint(w, bnd) for w in record.where):
                continue
            try:
                orders = {
                    "G": order_of(record.shape("G"), bnd),
                    "H": order_of(record.shape("H"), bnd),
                    "K": order_of(record.shape("K"), bnd),
                    "int": order_of(record.shape("int"), bnd),
                }
            except NonIntegralQuotient:
                continue
            if orders["G"] > cap:
                continue
            yield ConcreteCase(record, bnd, orders)

    yield from rec_enum(0, {})


def admissible_bindings(record, cap=DEFAULT_ORDER_CAP):
    return list(iter_admissible_bindings(record, cap))


def minimal_case(record):
    """The smallest admissible binding of a record, ignoring the order cap."""
    return next(iter_admissible_bindings(record, cap=None))


def _expr_value(expr, bnd):
    tree = ast.parse(expr.replace("^", "**"), mode="eval")
    return _c_eval(tree.body, bnd)


def _constraint_symbols(src):
    tree = ast.parse(src.replace("^", "**"), mode="eval")
    return {
        n.id for n in ast.walk(tree)
        if isinstance(n, ast.Name) and n.id not in _ALLOWED_CALLS
    }
