"""Command line front end.

Five groups mirror the library modules: ``hyper`` (doubling algebras),
``clifford``, ``lattice``, ``modular`` (q-series), ``id`` (standalone
kernels). Every subcommand has a ``--json`` mode; numbers that can outgrow
64 bits travel as decimal strings so nothing is rounded in transport. Exit
codes: 0 success, 1 domain error (the library message is echoed verbatim on
stderr), 2 usage error (the grammar is printed).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import clifford as cl
from . import hypercomplex as hc
from . import identities as ident
from . import lattices as lat
from . import modular as mod

GRAMMAR = """\
usage: exceptia <group> <command> [arguments]

  hyper     mul | conj | norm | inv | fano | xprod | permute
  clifford  mul | classify | spinors | superym
  lattice   build | info | theta | shortvec | dual | lll | leech | weyl | root
  modular   eta24 | j
  id        pihex | cannonball | area | link

named lattices: A<n> D<n> E6 E7 E8 D16+ 3E8 E8+D16+ LeechII LeechIcosian
common flags:   --order N   --max-norm M   --limit L   --json   --input FILE
environment:    EXCEPTIA_THREADS caps internal parallelism
run `exceptia <group> <command> --help` for the arguments of one command
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: {message}\n\n")
        sys.stderr.write(GRAMMAR)
        raise SystemExit(2)


# ---------------------------------------------------------------------------
# element expressions
#
# shared grammar for hyper and clifford operands:
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor (['*'] factor)*        (juxtaposition multiplies)
#   factor := rational | e<digits> | '(' expr ',' expr ')'
# the pair form builds a doubling pair (hyper only); products associate to
# the left, which matters once multiplication is non-associative.

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|e(\d+)|([()+\-*,]))")


def _tokenize(text: str) -> List[Tuple[str, object]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot read element {text!r}: unexpected "
                             f"character {text[pos:].strip()[0]!r}")
        if m.group(1):
            out.append(("num", Fraction(m.group(1))))
        elif m.group(2) is not None:
            out.append(("unit", int(m.group(2))))
        else:
            out.append(("sym", m.group(3)))
        pos = m.end()
    return out


class _ExprParser:
    def __init__(self, text: str, pairs: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.pairs = pairs

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def fail(self, why: str):
        raise ValueError(f"cannot read element {self.text!r}: {why}")

    def parse(self, atom, add, mul, neg):
        v = self.expr(atom, add, mul, neg)
        if self.pos != len(self.toks):
            self.fail("trailing input after the expression")
        return v

    def expr(self, atom, add, mul, neg):
        negate = False
        kind, val = self._peek()
        if kind == "sym" and val in "+-":
            self._take()
            negate = val == "-"
        acc = self.term(atom, mul)
        if negate:
            acc = neg(acc)
        while True:
            kind, val = self._peek()
            if kind == "sym" and val in "+-":
                self._take()
                t = self.term(atom, mul)
                acc = add(acc, neg(t) if val == "-" else t)
            else:
                return acc

    def term(self, atom, mul):
        acc = self.factor(atom)
        while True:
            kind, val = self._peek()
            if kind == "sym" and val == "*":
                self._take()
                acc = mul(acc, self.factor(atom))
            elif kind in ("num", "unit") or (kind == "sym" and val == "("
                                             and self.pairs):
                # juxtaposition multiplies, so "2 e1" and "2*e1" agree
                acc = mul(acc, self.factor(atom))
            else:
                return acc

    def factor(self, atom):
        kind, val = self._take()
        if kind == "num":
            return atom("num", val, self)
        if kind == "unit":
            return atom("unit", val, self)
        if kind == "sym" and val == "(" and self.pairs:
            return atom("pair", None, self)
        if kind is None:
            self.fail("it ends where a value was expected")
        self.fail(f"unexpected {val!r}")

    def expect(self, ch: str):
        kind, val = self._take()
        if kind != "sym" or val != ch:
            self.fail(f"expected {ch!r}")


def _h_lift(x: hc.HyperNumber, level: int) -> hc.HyperNumber:
    if x.level > level:
        raise ValueError(f"element needs level {x.level}, which exceeds "
                         f"level {level}")
    if x.level == level:
        return x
    pad = (Fraction(0),) * ((1 << level) - len(x.coords))
    return hc.HyperNumber(x.field, x.coords + pad)


def _h_common(x, y):
    level = max(x.level, y.level)
    return _h_lift(x, level), _h_lift(y, level)


def _h_add(x, y):
    x, y = _h_common(x, y)
    return x + y


def _h_mul(x, y):
    x, y = _h_common(x, y)
    return hc.cd_mul(x, y)


def _h_neg(x):
    return -x


def _h_atom(kind, val, p: _ExprParser):
    if kind == "num":
        return hc.HyperNumber(hc.RATIONAL, (val,))
    if kind == "unit":
        level = val.bit_length()
        return hc.basis_element(level, val)
    # pair: '(' already consumed
    a = p.expr(_h_atom, _h_add, _h_mul, _h_neg)
    p.expect(",")
    b = p.expr(_h_atom, _h_add, _h_mul, _h_neg)
    p.expect(")")
    a, b = _h_common(a, b)
    return hc.HyperNumber(a.field, a.coords + b.coords)


def parse_hyper(text: str, level: Optional[int] = None) -> hc.HyperNumber:
    """Read a doubling-algebra element; lift it to `level` when given."""
    x = _ExprParser(text, pairs=True).parse(_h_atom, _h_add, _h_mul, _h_neg)
    if level is not None:
        x = _h_lift(x, level)
    return x


def parse_clifford(text: str, sig: cl.CliffordSignature) -> cl.CliffordElement:
    def atom(kind, val, p):
        if kind == "num":
            return cl.scalar(sig, val)
        return cl.generator(sig, val)

    return _ExprParser(text, pairs=False).parse(
        atom, lambda a, b: a + b, cl.clif_mul, lambda a: -a)


# ---------------------------------------------------------------------------
# formatting

def _join_terms(parts: List[Tuple[int, str]]) -> str:
    """Assemble (sign, body) pairs into ``a + b - c`` form."""
    if not parts:
        return "0"
    out = []
    for sign, body in parts:
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


def format_hyper(x: hc.HyperNumber) -> str:
    parts = []
    for k, c in enumerate(x.coords):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = f"e{k}" if mag == 1 else f"{mag} e{k}"
        parts.append((1 if c > 0 else -1, body))
    return _join_terms(parts)


def _blade_name(mask: int) -> str:
    return "*".join(f"e{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def format_clifford(x: cl.CliffordElement) -> str:
    parts = []
    for mask, c in x.terms:
        mag = abs(c)
        if mask == 0:
            body = str(mag)
        else:
            name = _blade_name(mask)
            body = name if mag == 1 else f"{mag} {name}"
        parts.append((1 if c > 0 else -1, body))
    return _join_terms(parts)


def _emit(args, text_fn, json_obj_fn) -> int:
    if args.json:
        print(json.dumps(json_obj_fn()))
    else:
        print(text_fn())
    return 0


def _hyper_json(x: hc.HyperNumber) -> dict:
    return {"level": x.level, "coords": [str(c) for c in x.coords]}


def _series_json(s: mod.LaurentSeries) -> dict:
    return {"low": s.low, "coeffs": [str(c) for c in s.coeffs]}


def _lattice_json(l: lat.Lattice) -> dict:
    return {
        "rank": l.rank,
        "ambient": l.ambient_dim,
        "signature": l.signature,
        "basis": [[str(v) for v in row] for row in l.basis],
    }


# ---------------------------------------------------------------------------
# hyper group

def _cmd_hyper_mul(args):
    x = parse_hyper(args.x, args.level)
    y = parse_hyper(args.y, args.level)
    z = _h_mul(x, y)
    return _emit(args, lambda: format_hyper(z), lambda: _hyper_json(z))


def _cmd_hyper_conj(args):
    x = parse_hyper(args.x, args.level)
    z = hc.cd_conj(x)
    return _emit(args, lambda: format_hyper(z), lambda: _hyper_json(z))


def _cmd_hyper_norm(args):
    x = parse_hyper(args.x, args.level)
    n = hc.cd_norm(x)
    return _emit(args, lambda: str(n), lambda: {"norm": str(n)})


def _cmd_hyper_inv(args):
    x = parse_hyper(args.x, args.level)
    z = hc.cd_inv(x)
    return _emit(args, lambda: format_hyper(z), lambda: _hyper_json(z))


def _cmd_hyper_fano(args):
    if (args.i is None) != (args.j is None):
        raise ValueError("fano takes either two unit indices or none")
    if args.i is None:
        lines = hc.fano_lines()
        return _emit(args,
                     lambda: "\n".join(" ".join(map(str, ln)) for ln in lines),
                     lambda: {"lines": [list(ln) for ln in lines]})
    k, sign = hc.fano_mul(args.i, args.j)
    lhs = f"e{args.i} e{args.j}"
    rhs = ("" if sign > 0 else "-") + (f"e{k}" if k else "1")
    return _emit(args, lambda: f"{lhs} = {rhs}",
                 lambda: {"i": args.i, "j": args.j, "k": k, "sign": sign})


def _cmd_hyper_xprod(args):
    a = parse_hyper(args.a, 3)
    b = parse_hyper(args.b, 3)
    c = parse_hyper(args.c, 3)
    z = hc.xproduct(a, b, c)
    return _emit(args, lambda: format_hyper(z), lambda: _hyper_json(z))


def _cmd_hyper_permute(args):
    if sorted(args.images) != ["1", "2", "3"]:
        raise ValueError("the permutation must be three digits rearranging "
                         "123, e.g. 231")
    p = hc.PermutationIJK(tuple(int(ch) for ch in args.images))
    q = parse_hyper(args.q, 2)
    z = hc.ijk_permute(p, q)
    return _emit(args, lambda: format_hyper(z),
                 lambda: {**_hyper_json(z), "parity": p.parity})


# ---------------------------------------------------------------------------
# clifford group

def _sig(args) -> cl.CliffordSignature:
    return cl.CliffordSignature(args.p, args.q)


def _cmd_clifford_mul(args):
    sig = _sig(args)
    x = parse_clifford(args.x, sig)
    y = parse_clifford(args.y, sig)
    z = cl.clif_mul(x, y)
    return _emit(args, lambda: format_clifford(z), lambda: {
        "p": sig.p, "q": sig.q,
        "terms": [{"blade": [i + 1 for i in range(m.bit_length()) if m >> i & 1],
                   "coeff": str(c)} for m, c in z.terms],
    })


def _cmd_clifford_classify(args):
    c = cl.classify(_sig(args))
    return _emit(args, lambda: str(c), lambda: {
        "p": args.p, "q": args.q,
        "ring": c.ring, "size": c.size, "summands": c.summands,
        "text": str(c),
    })


def _cmd_clifford_spinors(args):
    prof = cl.spinor_taxonomy(args.n)
    fields = [("n", prof.n),
              ("dirac_complex_dim", prof.dirac_complex_dim),
              ("majorana", prof.majorana),
              ("weyl", prof.weyl),
              ("majorana_weyl", prof.majorana_weyl),
              ("minimal_real_components", prof.minimal_real_components)]

    def text():
        return "\n".join(f"{k} {str(v).lower() if isinstance(v, bool) else v}"
                         for k, v in fields)

    return _emit(args, text, lambda: dict(fields))


def _cmd_clifford_superym(args):
    dims = sorted(cl.super_ym_dims(args.lo, args.hi))
    return _emit(args, lambda: " ".join(map(str, dims)),
                 lambda: {"lo": args.lo, "hi": args.hi, "dims": dims})


# ---------------------------------------------------------------------------
# lattice group

def _resolve_lattice(args) -> lat.Lattice:
    name = getattr(args, "name", None)
    path = getattr(args, "input", None)
    if path and name:
        raise ValueError("give a lattice name or --input FILE, not both")
    if path:
        with open(path) as fh:
            return lat.parse_lattice(fh.read())
    if not name:
        raise ValueError("a lattice name or --input FILE is required")
    return lat.named_lattice(name)


def _cmd_lattice_build(args):
    l = _resolve_lattice(args)
    return _emit(args, lambda: lat.format_lattice(l).rstrip("\n"),
                 lambda: _lattice_json(l))


def _cmd_lattice_info(args):
    l = _resolve_lattice(args)
    info = lat.lattice_info(l)
    print(json.dumps(info))
    return 0


def _cmd_lattice_theta(args):
    l = _resolve_lattice(args)
    th = lat.theta_series(l, args.order)
    series = mod.LaurentSeries(0, th.counts)
    return _emit(args, lambda: mod.format_series(series), lambda: {
        "order": th.order, "counts": [str(c) for c in th.counts]})


def _cmd_lattice_shortvec(args):
    l = _resolve_lattice(args)
    counts = lat.short_vectors(l, args.max_norm)
    return _emit(args,
                 lambda: "\n".join(f"{n} {c}" for n, c in counts.items()),
                 lambda: {"max_norm": args.max_norm,
                          "counts": {str(n): str(c) for n, c in counts.items()}})


def _cmd_lattice_dual(args):
    l = lat.dual_lattice(_resolve_lattice(args))
    return _emit(args, lambda: lat.format_lattice(l).rstrip("\n"),
                 lambda: _lattice_json(l))


def _cmd_lattice_lll(args):
    l = lat.lll_reduce(_resolve_lattice(args))
    return _emit(args, lambda: lat.format_lattice(l).rstrip("\n"),
                 lambda: _lattice_json(l))


def _cmd_lattice_leech(args):
    l = lat.leech_from_ii26() if args.method == "ii" else lat.leech_from_icosians()
    return _emit(args, lambda: lat.format_lattice(l).rstrip("\n"),
                 lambda: _lattice_json(l))


def _cmd_lattice_weyl(args):
    w = lat.weyl_vector(args.dim)
    norm = lat.minkowski_dot(w, w)
    coords = [str(c) for c in w.coords]
    return _emit(args,
                 lambda: " ".join(coords) + f"\nnorm {norm}",
                 lambda: {"dim": args.dim, "coords": coords,
                          "norm": str(norm)})


def _cmd_lattice_root(args):
    coords = [Fraction(tok) for tok in args.coords]
    v = lat.LorentzianVector.from_coords(coords)
    ok = lat.is_fundamental_root(v, args.dim)
    return _emit(args, lambda: "true" if ok else "false",
                 lambda: {"dim": args.dim, "fundamental": ok})


# ---------------------------------------------------------------------------
# modular group

def _cmd_modular_eta24(args):
    s = mod.eta24(args.order)
    return _emit(args, lambda: mod.format_series(s), lambda: _series_json(s))


def _cmd_modular_j(args):
    if args.lattice and args.input:
        raise ValueError("give --lattice NAME or --input FILE, not both")
    if args.input:
        with open(args.input) as fh:
            l = lat.parse_lattice(fh.read())
    elif args.lattice:
        l = lat.named_lattice(args.lattice)
    else:
        raise ValueError("--lattice NAME or --input FILE is required")
    s = mod.j_from_lattice(l, args.order)
    return _emit(args, lambda: mod.format_series(s), lambda: _series_json(s))


# ---------------------------------------------------------------------------
# id group

def _cmd_id_pihex(args):
    digits = ident.bbp_pi_hex(args.start, args.count)
    return _emit(args, lambda: digits,
                 lambda: {"start": args.start, "count": args.count,
                          "digits": digits})


def _cmd_id_cannonball(args):
    hits = sorted(ident.cannonball_search(args.limit))
    return _emit(args, lambda: " ".join(map(str, hits)),
                 lambda: {"limit": args.limit, "hits": hits})


def _cmd_id_area(args):
    spins = ident.SpinList.from_values(args.spins)
    exact, approx = ident.spin_area(spins)
    parts = []
    for j, m in exact.items():
        body = f"sqrt({j * (j + 1)})"
        if m != 1:
            body = f"{m} {body}"
        parts.append((1, body))

    def text():
        return f"{_join_terms(parts)} = {approx!r}"

    return _emit(args, text, lambda: {
        "terms": [{"spin": str(j), "count": m} for j, m in exact.items()],
        "approx": approx,
    })


def _parse_loop_file(path: str) -> Tuple[ident.PolyLoop, ident.PolyLoop]:
    with open(path) as fh:
        content = fh.read()
    blocks: List[List[Tuple[int, int, int]]] = [[]]
    for raw in content.splitlines():
        line = raw.strip()
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ValueError(f"loop file line {line!r} is not an integer "
                             "triple")
        try:
            blocks[-1].append(tuple(int(t) for t in toks))
        except ValueError:
            raise ValueError(f"loop file line {line!r} is not an integer "
                             "triple") from None
    blocks = [b for b in blocks if b]
    if len(blocks) != 2:
        raise ValueError(f"loop file must hold two blank-line-separated "
                         f"blocks of vertices, found {len(blocks)}")
    return ident.PolyLoop(tuple(blocks[0])), ident.PolyLoop(tuple(blocks[1]))


def _cmd_id_link(args):
    g, h = _parse_loop_file(args.input)
    n = ident.linking_number(g, h)
    return _emit(args, lambda: str(n), lambda: {"linking_number": n})


# ---------------------------------------------------------------------------
# wiring

def _build_parser() -> _Parser:
    top = _Parser(prog="exceptia", description=__doc__)
    groups = top.add_subparsers(dest="group", required=True, metavar="group")

    def sub(parent, name, fn, **kwargs):
        p = parent.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    hy = groups.add_parser("hyper").add_subparsers(
        dest="command", required=True, metavar="command")
    p = sub(hy, "mul", _cmd_hyper_mul)
    p.add_argument("--level", type=int)
    p.add_argument("x")
    p.add_argument("y")
    p = sub(hy, "conj", _cmd_hyper_conj)
    p.add_argument("--level", type=int)
    p.add_argument("x")
    p = sub(hy, "norm", _cmd_hyper_norm)
    p.add_argument("--level", type=int)
    p.add_argument("x")
    p = sub(hy, "inv", _cmd_hyper_inv)
    p.add_argument("--level", type=int)
    p.add_argument("x")
    p = sub(hy, "fano", _cmd_hyper_fano)
    p.add_argument("i", nargs="?", type=int)
    p.add_argument("j", nargs="?", type=int)
    p = sub(hy, "xprod", _cmd_hyper_xprod)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p = sub(hy, "permute", _cmd_hyper_permute)
    p.add_argument("images")
    p.add_argument("q")

    cf = groups.add_parser("clifford").add_subparsers(
        dest="command", required=True, metavar="command")
    p = sub(cf, "mul", _cmd_clifford_mul)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("x")
    p.add_argument("y")
    p = sub(cf, "classify", _cmd_clifford_classify)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p = sub(cf, "spinors", _cmd_clifford_spinors)
    p.add_argument("n", type=int)
    p = sub(cf, "superym", _cmd_clifford_superym)
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)

    la = groups.add_parser("lattice").add_subparsers(
        dest="command", required=True, metavar="command")
    for name, fn in (("build", _cmd_lattice_build), ("info", _cmd_lattice_info),
                     ("dual", _cmd_lattice_dual), ("lll", _cmd_lattice_lll)):
        p = sub(la, name, fn)
        p.add_argument("name", nargs="?")
        p.add_argument("--input")
    p = sub(la, "theta", _cmd_lattice_theta)
    p.add_argument("name", nargs="?")
    p.add_argument("--input")
    p.add_argument("--order", type=int, required=True)
    p = sub(la, "shortvec", _cmd_lattice_shortvec)
    p.add_argument("name", nargs="?")
    p.add_argument("--input")
    p.add_argument("--max-norm", type=int, required=True, dest="max_norm")
    p = sub(la, "leech", _cmd_lattice_leech)
    p.add_argument("method", nargs="?", choices=("ii", "icosian"),
                   default="ii")
    p = sub(la, "weyl", _cmd_lattice_weyl)
    p.add_argument("dim", type=int)
    p = sub(la, "root", _cmd_lattice_root)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("coords", nargs="+")

    mo = groups.add_parser("modular").add_subparsers(
        dest="command", required=True, metavar="command")
    p = sub(mo, "eta24", _cmd_modular_eta24)
    p.add_argument("--order", type=int, required=True)
    p = sub(mo, "j", _cmd_modular_j)
    p.add_argument("--lattice")
    p.add_argument("--input")
    p.add_argument("--order", type=int, default=5)

    idg = groups.add_parser("id").add_subparsers(
        dest="command", required=True, metavar="command")
    p = sub(idg, "pihex", _cmd_id_pihex)
    p.add_argument("start", type=int)
    p.add_argument("count", type=int)
    p = sub(idg, "cannonball", _cmd_id_cannonball)
    p.add_argument("--limit", type=int, required=True)
    p = sub(idg, "area", _cmd_id_area)
    p.add_argument("spins", nargs="*")
    p = sub(idg, "link", _cmd_id_link)
    p.add_argument("--input", required=True)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
