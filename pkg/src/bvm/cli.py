"""Script and REPL front end tying the library together.

A session owns one algebra, a namespace of constructed objects, and the
options (rank bound, enumeration cap, seed, output format).  Scripts are
line-oriented; ``#`` starts a comment.  Statement grammar::

    algebra NAME ATOMS
    hf NAME = {{},{{}}}
    name NAME = ^HFNAME | ^{...}
    set NAME = { CHILD : ELEM , ... }          CHILD: set name, ^HFNAME, ^{...}
    eval "FORMULA" [var=NAME ...]
    check eval "FORMULA" [var=NAME ...] expect ELEM
    check los "FORMULA" [var=NAME ...]
    check transfer "FORMULA" [var=HFNAME ...]
    maximize "FORMULA" VAR [var=NAME ...] [--rank R] [as NAME]
    descend NAME [--rank R]
    ascend NAME = NAME,NAME,...
    escher-check [--rank R] [--samples K]
    bset NAME discrete K | bset NAME symmdiff
    bsystem NAME over BSET sig(SYM/ARITY,...) SYM=BUILTIN ...
    beval SYSTEM "FORMULA" [var=LABEL ...]
    poset NAME = chain K | antichain K | forcing N M [KAPPA]
    complete NAME [--dot]
    refined? NAME
    suite SUITENAME

Element literals are ``0``, ``1``, ``{}`` and ``{a1,a3}``.  Formula free
variables resolve against the session namespace unless bound explicitly.
Exit status is nonzero iff any ``check`` (or ``suite``) failed.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from . import __version__, arrows, bsets, posets
from .balg import BoolAlg
from .errors import BvmError, ScriptError
from .evaluator import check_los, check_restricted_transfer, eval_bv, find_max_witness
from .formula import EMPTY_SIGNATURE, Signature, free_vars, parse
from .hf import HFSet, parse_hf
from .suites import SUITES, run_suite
from .universe import BvSet, Universe

DEFAULTS = {"atoms": 2, "rank_max": 3, "cap": 200_000, "seed": 0, "format": "text"}


class Session:
    """One algebra, one universe, a flat namespace of named objects."""

    def __init__(self, atoms=2, rank_max=3, cap=200_000, seed=0):
        self.rank_max = rank_max
        self.cap = cap
        self.seed = seed
        self.names = {}
        self.algebra = None
        self.universe = None
        self.checks_failed = 0
        self.set_algebra("B", atoms)

    def set_algebra(self, name, atoms):
        # switching algebras clears the universe and every named object
        self.algebra = BoolAlg(atoms, name=name)
        self.universe = Universe(self.algebra, cap=self.cap)
        self.names = {}

    def lookup(self, name, kinds=None):
        if name not in self.names:
            raise ScriptError(0, f"unknown name {name!r}")
        obj = self.names[name]
        if kinds is not None and not isinstance(obj, kinds):
            raise ScriptError(0, f"{name!r} is not usable here")
        return obj

    def fragment(self, rank=None):
        return self.universe.enumerate_universe(
            self.rank_max if rank is None else rank, cap=self.cap
        )


def _split_bindings(words):
    bindings, rest = {}, []
    for w in words:
        if "=" in w and not w.startswith("-"):
            k, v = w.split("=", 1)
            bindings[k] = v
        else:
            rest.append(w)
    return bindings, rest


def _option(words, flag, default=None, cast=int):
    if flag in words:
        i = words.index(flag)
        value = cast(words[i + 1])
        del words[i : i + 2]
        return value
    return default


class Interpreter:
    def __init__(self, session: Session, emit):
        self.session = session
        self.emit = emit

    # -- name/value helpers ------------------------------------------------

    def _bv_operand(self, token, lineno):
        s = self.session
        if token.startswith("^"):
            literal = token[1:]
            if literal.startswith("{"):
                return s.universe.canonical_name(parse_hf(literal))
            return s.universe.canonical_name(s.lookup(literal, (HFSet,)))
        return s.lookup(token, (BvSet,))

    def _formula_env(self, f, bindings, lineno, want):
        s = self.session
        env = {}
        for v in free_vars(f):
            source = bindings.get(v, v)
            obj = s.names.get(source)
            if obj is None:
                raise ScriptError(lineno, f"free variable {v!r} resolves to nothing")
            if not isinstance(obj, want):
                raise ScriptError(lineno, f"{source!r} has the wrong kind for {v!r}")
            env[v] = obj
        return env

    # -- statements ----------------------------------------------------------

    def run_line(self, line, lineno):
        text = line.split("#", 1)[0].strip()
        if not text:
            return
        try:
            words = shlex.split(text)
        except ValueError as exc:
            raise ScriptError(lineno, f"unbalanced quoting: {exc}")
        head = words[0]
        handler = getattr(self, f"stmt_{head.replace('-', '_').rstrip('?')}", None)
        if handler is None:
            raise ScriptError(lineno, f"unknown statement {head!r}")
        try:
            handler(words[1:], text, lineno)
        except ScriptError:
            raise
        except BvmError as exc:
            raise ScriptError(lineno, str(exc))

    def stmt_algebra(self, args, text, lineno):
        if len(args) != 2:
            raise ScriptError(lineno, "usage: algebra NAME ATOMS")
        self.session.set_algebra(args[0], int(args[1]))
        self.emit(lineno, "algebra", {
            "name": args[0],
            "atoms": int(args[1]),
            "atom_names": list(self.session.algebra.atom_names),
        }, f"algebra {args[0]} with atoms {', '.join(self.session.algebra.atom_names)}")

    def stmt_hf(self, args, text, lineno):
        if len(args) < 3 or args[1] != "=":
            raise ScriptError(lineno, "usage: hf NAME = {{},...}")
        h = parse_hf("".join(args[2:]))
        self.session.names[args[0]] = h
        self.emit(lineno, "hf", {"name": args[0], "value": repr(h)},
                  f"hf {args[0]} = {h!r} (rank {h.rank})")

    def stmt_name(self, args, text, lineno):
        if len(args) != 3 or args[1] != "=" or not args[2].startswith("^"):
            raise ScriptError(lineno, "usage: name NAME = ^HFNAME")
        x = self._bv_operand(args[2], lineno)
        self.session.names[args[0]] = x
        self.emit(lineno, "name", {"name": args[0], "id": x.uid, "rank": x.rank},
                  f"name {args[0]} -> set #{x.uid} (rank {x.rank})")

    def stmt_set(self, args, text, lineno):
        s = self.session
        body = text.split("=", 1)
        if len(body) != 2 or not args or args[1] != "=":
            raise ScriptError(lineno, "usage: set NAME = { CHILD : ELEM, ... }")
        name = args[0]
        literal = body[1].strip()
        if not (literal.startswith("{") and literal.endswith("}")):
            raise ScriptError(lineno, "set literal must be braced")
        inner = literal[1:-1].strip()
        entries = {}
        if inner:
            for part in _split_top_level(inner, ","):
                if ":" not in part:
                    raise ScriptError(lineno, f"entry {part!r} needs CHILD : ELEM")
                child_text, elem_text = [
                    piece.strip() for piece in _split_top_level(part, ":", limit=1)
                ]
                child = self._bv_operand(child_text, lineno)
                value = s.algebra.parse_element(elem_text)
                entries[child] = entries.get(child, s.algebra.zero) | value
        x = s.universe.make(entries)
        s.names[name] = x
        self.emit(lineno, "set", {"name": name, "id": x.uid, "rank": x.rank,
                                  "dump": s.universe.to_json(x)},
                  f"set {name} -> set #{x.uid} (rank {x.rank}, {len(x.entries)} entries)")

    def stmt_eval(self, args, text, lineno):
        s = self.session
        if not args:
            raise ScriptError(lineno, 'usage: eval "FORMULA" [var=NAME ...]')
        f = parse(args[0])
        bindings, _ = _split_bindings(args[1:])
        env = self._formula_env(f, bindings, lineno, BvSet)
        truth = eval_bv(f, env, s.universe)
        self.emit(lineno, "eval", {"formula": args[0], "truth": truth.to_json()},
                  f"[[{args[0]}]] = {truth!r}")

    def stmt_check(self, args, text, lineno):
        if not args:
            raise ScriptError(lineno, "usage: check eval|los|transfer ...")
        kind, rest = args[0], args[1:]
        if kind == "los":
            self._check_los(rest, lineno)
        elif kind == "transfer":
            self._check_transfer(rest, lineno)
        elif kind == "eval":
            self._check_eval(rest, lineno)
        else:
            raise ScriptError(lineno, f"unknown check {kind!r}")

    def _check_los(self, rest, lineno):
        s = self.session
        f = parse(rest[0])
        bindings, _ = _split_bindings(rest[1:])
        env = self._formula_env(f, bindings, lineno, BvSet)
        report = check_los(f, env, s.universe)
        if not report.holds:
            s.checks_failed += 1
        status = "pass" if report.holds else "FAIL"
        self.emit(lineno, "check_los", report.to_json(),
                  f"check los {rest[0]!r}: {status}, satisfied atoms "
                  f"{report.satisfied_atoms!r}, truth {report.truth!r}")

    def _check_transfer(self, rest, lineno):
        s = self.session
        f = parse(rest[0])
        bindings, _ = _split_bindings(rest[1:])
        env = self._formula_env(f, bindings, lineno, HFSet)
        report = check_restricted_transfer(f, env, s.universe)
        if not report.holds:
            s.checks_failed += 1
        status = "pass" if report.holds else "FAIL"
        self.emit(lineno, "check_transfer", report.to_json(),
                  f"check transfer {rest[0]!r}: {status} "
                  f"(classical {report.classical}, truth {report.boolean_truth!r})")

    def _check_eval(self, rest, lineno):
        s = self.session
        if "expect" not in rest:
            raise ScriptError(lineno, 'usage: check eval "F" [v=NAME ...] expect ELEM')
        at = rest.index("expect")
        f = parse(rest[0])
        bindings, _ = _split_bindings(rest[1:at])
        expected = s.algebra.parse_element(" ".join(rest[at + 1:]))
        env = self._formula_env(f, bindings, lineno, BvSet)
        truth = eval_bv(f, env, s.universe)
        ok = truth == expected
        if not ok:
            s.checks_failed += 1
        self.emit(lineno, "check_eval",
                  {"formula": rest[0], "truth": truth.to_json(),
                   "expected": expected.to_json(), "ok": ok},
                  f"check eval {rest[0]!r}: {'pass' if ok else 'FAIL'} "
                  f"(truth {truth!r}, expected {expected!r})")

    def stmt_maximize(self, args, text, lineno):
        s = self.session
        args = list(args)
        rank = _option(args, "--rank", None)
        store = None
        if "as" in args:
            i = args.index("as")
            store = args[i + 1]
            del args[i : i + 2]
        if len(args) < 2:
            raise ScriptError(lineno, 'usage: maximize "FORMULA" VAR [v=NAME ...]')
        f = parse(args[0])
        var = args[1]
        bindings, _ = _split_bindings(args[2:])
        others = [v for v in free_vars(f) if v != var]
        env = {}
        for v in others:
            source = bindings.get(v, v)
            env[v] = s.lookup(source, (BvSet,))
        fragment = s.fragment(rank)
        witness, value = find_max_witness(f, var, env, fragment, s.universe)
        if store:
            s.names[store] = witness
        self.emit(lineno, "maximize",
                  {"formula": args[0], "variable": var, "value": value.to_json(),
                   "witness_id": witness.uid},
                  f"sup over fragment = {value!r}, witness set #{witness.uid}"
                  + (f" (bound to {store})" if store else ""))

    def stmt_descend(self, args, text, lineno):
        s = self.session
        args = list(args)
        rank = _option(args, "--rank", None)
        x = s.lookup(args[0], (BvSet,))
        members = arrows.descent(x, s.fragment(rank), s.universe)
        self.emit(lineno, "descend",
                  {"name": args[0], "member_ids": [m.uid for m in members]},
                  f"descent of {args[0]}: {len(members)} members "
                  f"(ids {[m.uid for m in members]})")

    def stmt_ascend(self, args, text, lineno):
        s = self.session
        if len(args) < 3 or args[1] != "=":
            raise ScriptError(lineno, "usage: ascend NAME = NAME,NAME,...")
        sources = [w.strip() for w in " ".join(args[2:]).split(",") if w.strip()]
        xs = [s.lookup(nm, (BvSet,)) for nm in sources]
        up = arrows.ascent(xs, s.universe)
        s.names[args[0]] = up
        self.emit(lineno, "ascend", {"name": args[0], "id": up.uid},
                  f"ascend {args[0]} -> set #{up.uid} ({len(xs)} members)")

    def stmt_escher_check(self, args, text, lineno):
        from .suites import suite_escher

        args = list(args)
        rank = _option(args, "--rank", 3)
        samples = _option(args, "--samples", 30)
        result = suite_escher(seed=self.session.seed, instances=samples)
        if not result.ok:
            self.session.checks_failed += 1
        self.emit(lineno, "escher_check", result.to_json(),
                  "\n".join(result.lines()) + f"\n(rank bound {rank})")

    def stmt_bset(self, args, text, lineno):
        s = self.session
        if len(args) < 2:
            raise ScriptError(lineno, "usage: bset NAME discrete K | bset NAME symmdiff")
        name, kind = args[0], args[1]
        if kind == "discrete":
            size = int(args[2]) if len(args) > 2 else 2
            X = bsets.make_bset(
                s.algebra, [f"x{i}" for i in range(size)], preset="discrete"
            )
        elif kind == "symmdiff":
            X = bsets.make_bset(s.algebra, preset="symmdiff")
        else:
            raise ScriptError(lineno, f"unknown bset preset {kind!r}")
        s.names[name] = X
        self.emit(lineno, "bset", {"name": name, "carrier": [repr(c) for c in X.carrier]},
                  f"bset {name}: carrier size {len(X.carrier)} ({kind})")

    def stmt_bsystem(self, args, text, lineno):
        s = self.session
        if len(args) < 4 or args[1] != "over":
            raise ScriptError(
                lineno, "usage: bsystem NAME over BSET sig(SYM/AR,...) SYM=BUILTIN ..."
            )
        name, base_name = args[0], args[2]
        X = s.lookup(base_name, (bsets.BSet,))
        sig_text = args[3]
        if not (sig_text.startswith("sig(") and sig_text.endswith(")")):
            raise ScriptError(lineno, "signature must look like sig(le/2,...)")
        functions, predicates = {}, {}
        declared = []
        for piece in sig_text[4:-1].split(","):
            piece = piece.strip()
            if not piece:
                continue
            sym, arity = piece.split("/")
            declared.append((sym, int(arity)))
        bindings, _ = _split_bindings(args[4:])
        operations, preds = {}, {}
        for sym, arity in declared:
            builtin = bindings.get(sym)
            if builtin is None:
                raise ScriptError(lineno, f"symbol {sym!r} needs a table binding")
            kind, table = _builtin_table(X, builtin, arity)
            if kind == "op":
                functions[sym] = arity
                operations[sym] = table
            else:
                predicates[sym] = arity
                preds[sym] = table
        # constants c0.. name the carrier elements
        for i, label in enumerate(X.carrier):
            functions[f"c{i}"] = 0
            operations[f"c{i}"] = label
        system = bsets.BSystem(X, Signature(functions, predicates), operations, preds)
        s.names[name] = system
        self.emit(lineno, "bsystem",
                  {"name": name, "signature": {"functions": functions,
                                               "predicates": predicates}},
                  f"bsystem {name} over {base_name} "
                  f"(ops {sorted(functions)}, preds {sorted(predicates)})")

    def stmt_beval(self, args, text, lineno):
        s = self.session
        if len(args) < 2:
            raise ScriptError(lineno, 'usage: beval SYSTEM "FORMULA" [v=LABEL ...]')
        system = s.lookup(args[0], (bsets.BSystem,))
        f = parse(args[1], system.sig)
        bindings, _ = _split_bindings(args[2:])
        env = {}
        for v in free_vars(f):
            label = bindings.get(v)
            if label is None:
                raise ScriptError(lineno, f"free variable {v!r} needs var=LABEL")
            matches = [c for c in system.base.carrier if str(c) == label or repr(c) == label]
            if not matches:
                raise ScriptError(lineno, f"{label!r} is not a carrier label")
            env[v] = matches[0]
        truth = bsets.eval_bsystem(system, f, env)
        self.emit(lineno, "beval", {"formula": args[1], "truth": truth.to_json()},
                  f"|{args[1]}| = {truth!r}")

    def stmt_poset(self, args, text, lineno):
        s = self.session
        if len(args) < 3 or args[1] != "=":
            raise ScriptError(lineno, "usage: poset NAME = chain K | antichain K | forcing N M [KAPPA]")
        name, kind = args[0], args[2]
        if kind == "chain":
            P = posets.chain(int(args[3]))
        elif kind == "antichain":
            P = posets.antichain(int(args[3]))
        elif kind == "forcing":
            n, m = int(args[3]), int(args[4])
            kappa = int(args[5]) if len(args) > 5 else None
            if kappa is not None and kappa > n:
                self.emit(lineno, "note", {"warning": "kappa exceeds the domain size"},
                          f"note: kappa {kappa} > {n} adds nothing at finite scale; "
                          "infinite-kappa phenomena are out of scope")
            P = posets.forcing_c(n, m, kappa)
        else:
            raise ScriptError(lineno, f"unknown poset constructor {kind!r}")
        s.names[name] = P
        self.emit(lineno, "poset", {"name": name, "size": P.size,
                                    "labels": list(P.labels)},
                  f"poset {name}: {P.size} elements (bottom included)")

    def stmt_complete(self, args, text, lineno):
        s = self.session
        args = list(args)
        want_dot = "--dot" in args
        if want_dot:
            args.remove("--dot")
        P = s.lookup(args[0], (posets.FinPoset,))
        comp = posets.completion(P)
        payload = {
            "poset": args[0],
            "bands": len(comp.bands),
            "atoms": comp.algebra.atom_count,
            "atom_bands": [list(posets.Band(P, m).labels()) for m in comp.atom_masks],
        }
        text_out = (f"completion of {args[0]}: {len(comp.bands)} bands, "
                    f"algebra with {comp.algebra.atom_count} atoms")
        if want_dot:
            payload["dot"] = comp.to_dot()
            text_out += "\n" + comp.to_dot()
        self.emit(lineno, "complete", payload, text_out)

    def stmt_refined(self, args, text, lineno):
        s = self.session
        P = s.lookup(args[0], (posets.FinPoset,))
        answer, report = posets.is_refined(P)
        self.emit(lineno, "refined", {"poset": args[0], **report.to_json()},
                  f"refined? {args[0]}: {answer} per-condition {report.to_json()}")

    def stmt_suite(self, args, text, lineno):
        if not args:
            raise ScriptError(lineno, f"usage: suite NAME (one of {sorted(SUITES)} or all)")
        result = run_suite(args[0], seed=self.session.seed)
        if not result.ok:
            self.session.checks_failed += 1
        self.emit(lineno, "suite", result.to_json(), "\n".join(result.lines()))


def _split_top_level(text, sep, limit=None):
    """Split on a separator, ignoring separators nested in braces."""
    parts, depth, current, done = [], 0, [], 0
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == sep and depth == 0 and (limit is None or done < limit):
            parts.append("".join(current))
            current = []
            done += 1
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _builtin_table(X, builtin, arity):
    """Tables available by name when wiring a system in a script."""
    alg = X.alg
    if builtin == "imp-table":
        if arity != 2:
            raise ScriptError(0, "imp-table is binary")
        return "pred", {
            (a, b): a.imp(b) for a in X.carrier for b in X.carrier
        }
    if builtin == "eq-pred":
        if arity != 2:
            raise ScriptError(0, "eq-pred is binary")
        return "pred", {
            (a, b): ~X.d(a, b) for a in X.carrier for b in X.carrier
        }
    if builtin == "meet-op":
        return "op", {(a, b): a & b for a in X.carrier for b in X.carrier}
    if builtin == "join-op":
        return "op", {(a, b): a | b for a in X.carrier for b in X.carrier}
    raise ScriptError(0, f"unknown builtin table {builtin!r}")


# ---------------------------------------------------------------------------
# drivers

def run_script(lines, session: Session, out=None, fmt="text"):
    """Execute statements in order; returns the number of failed checks.

    In JSON mode the whole run is emitted as a single document at the end,
    so identical script, seed and version give byte-identical output.
    """
    out = out if out is not None else sys.stdout
    records = []

    def emit(lineno, kind, payload, text):
        if fmt == "json":
            records.append({"line": lineno, "kind": kind, "result": payload})
        else:
            print(text, file=out)

    interp = Interpreter(session, emit)
    error = None
    for lineno, line in enumerate(lines, start=1):
        try:
            interp.run_line(line, lineno)
        except ScriptError as exc:
            error = {"line": lineno, "error": str(exc)}
            if fmt != "json":
                print(f"error: {exc}", file=out)
            break
    if fmt == "json":
        document = {
            "version": __version__,
            "seed": session.seed,
            "statements": records,
            "checks_failed": session.checks_failed,
            "ok": session.checks_failed == 0 and error is None,
        }
        if error:
            document["error"] = error
        print(json.dumps(document, sort_keys=True, indent=2), file=out)
    if error:
        return session.checks_failed + 1
    return session.checks_failed


def repl(session: Session, stdin=None, out=None):
    stdin = stdin if stdin is not None else sys.stdin
    out = out if out is not None else sys.stdout
    print(f"bvm {__version__} workbench; 'quit' leaves", file=out)
    interp = Interpreter(
        session, lambda lineno, kind, payload, text: print(text, file=out)
    )
    for lineno, line in enumerate(stdin, start=1):
        stripped = line.strip()
        if stripped in ("quit", "exit"):
            break
        try:
            interp.run_line(line, lineno)
        except ScriptError as exc:
            print(f"error: {exc}", file=out)
    return session.checks_failed


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="bvm",
        description="Workbench for finite Boolean-valued models of set theory.",
    )
    parser.add_argument("--atoms", type=int, default=DEFAULTS["atoms"])
    parser.add_argument("--rank-max", type=int, default=DEFAULTS["rank_max"])
    parser.add_argument("--cap", type=int, default=DEFAULTS["cap"])
    parser.add_argument("--seed", type=int, default=DEFAULTS["seed"])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="execute a script file ('-' for stdin)")
    run_p.add_argument("path")
    sub.add_parser("repl", help="interactive session")
    suite_p = sub.add_parser("suite", help="run a named verification suite")
    suite_p.add_argument("name", nargs="?", default="all")
    suite_p.add_argument("--list", action="store_true", help="list suite names")
    args = parser.parse_args(argv)

    session = Session(
        atoms=args.atoms, rank_max=args.rank_max, cap=args.cap, seed=args.seed
    )
    if args.command == "run":
        if args.path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.path) as fh:
                lines = fh.read().splitlines()
        failed = run_script(lines, session, fmt=args.format)
        return 1 if failed else 0
    if args.command == "repl":
        failed = repl(session)
        return 1 if failed else 0
    if args.command == "suite":
        if args.list:
            for nm in sorted(SUITES) + ["all"]:
                print(nm)
            return 0
        result = run_suite(args.name, seed=args.seed)
        if args.format == "json":
            print(json.dumps(
                {"version": __version__, "seed": args.seed, **result.to_json()},
                sort_keys=True, indent=2,
            ))
        else:
            print("\n".join(result.lines()))
        return 0 if result.ok else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
