"""Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 usage error.  The
MODLAT_SEED environment variable overrides the configured seed.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import elements as el
from . import perfect, repio, reps, seqs, verify
from .terms import D222, D4, TermError, parse, render


class UsageError(Exception):
    pass


def _config(args) -> verify.Config:
    seed = args.seed
    env_seed = os.environ.get("MODLAT_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    return verify.Config(prime=args.prime, seed=seed, max_dim=args.max_dim,
                         bank_depth=args.depth, samples=args.samples)


def _add_config_args(p):
    p.add_argument("--prime", type=int, default=5)
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)


def _lattice(arg: str) -> str:
    if arg not in (D222, D4):
        raise UsageError(f"unknown lattice {arg!r} (use d222 or d4)")
    return arg


def cmd_seq(args) -> int:
    kind = _lattice(args.lattice)
    if args.action == "normalize":
        c = seqs.normalize(args.word[0], kind)
        print(c)
        return 0
    if args.action == "equiv":
        if len(args.word) != 2:
            raise UsageError("seq equiv needs exactly two words")
        ok = seqs.equivalent(args.word[0], args.word[1], kind)
        print("equivalent" if ok else "not equivalent")
        return 0 if ok else 1
    if args.action == "phi":
        if args.index is None:
            raise UsageError("seq phi needs --index")
        c = seqs.phi_prepend(args.index, args.word[0], kind)
        print(c)
        return 0
    if args.action == "enum":
        if args.length is None:
            raise UsageError("seq enum needs --length")
        for c in seqs.enumerate_classes(args.length, kind, args.ending):
            print(f"{c}\t{c.realize()}")
        return 0
    raise UsageError(f"unknown seq action {args.action!r}")


def cmd_elem(args) -> int:
    kind = _lattice(args.lattice)
    family = args.family
    if family in ("e~", "f0~"):
        if kind != D4:
            raise UsageError("comparison elements exist for d4 only")
        term = el.gp_tilde(family, args.alpha)
    else:
        if args.form != "table" and kind == D4:
            raise UsageError("alternate forms exist for d222 only")
        term = el.element(family, args.alpha, kind, form=args.form)
    print(render(term))
    return 0


def cmd_eval(args) -> int:
    rep = repio.load(args.rep)
    if isinstance(rep, reps.MatRep):
        rep = reps.to_subspace(rep)
    term = parse(args.term, rep.kind)
    val = rep.evaluate(term)
    print(f"dim {val.rank} of {val.ambient_dim}")
    for row in val.basis:
        print(" ".join(str(int(v)) for v in row))
    return 0


def cmd_rep(args) -> int:
    if args.action == "bank":
        bank = reps.rep_bank(args.depth, args.prime, _lattice(args.lattice))
        os.makedirs(args.out, exist_ok=True)
        for idx, member in enumerate(bank):
            path = os.path.join(args.out, f"{idx:03d}_{member.label.replace('/', '_')}.rep")
            repio.store(member.sub if member.ambient else member.mat, path)
        print(f"wrote {len(bank)} representations to {args.out}")
        return 0
    if args.action == "coxeter":
        rep = repio.load(args.infile)
        if args.op == "plus":
            if isinstance(rep, reps.SubspaceRep) and args.k == 1:
                out = reps.coxeter_plus(rep).rep
            else:
                if isinstance(rep, reps.SubspaceRep):
                    raise UsageError("iterated plus needs a matrix-form file")
                out = reps.coxeter_power(rep, -args.k)
        elif args.op == "minus":
            if isinstance(rep, reps.SubspaceRep):
                raise UsageError("coxeter minus needs a matrix-form file")
            out = reps.coxeter_power(rep, args.k)
        else:
            raise UsageError(f"unknown coxeter op {args.op!r}")
        repio.store(out, args.out)
        dims = out.dim_vector() if hasattr(out, "dim_vector") else None
        print(f"dims {dims}")
        return 0
    if args.action == "random":
        rho = reps.random_rep(args.seed, args.prime, args.max_dim, _lattice(args.lattice))
        repio.store(rho, args.out)
        print(f"wrote {args.out} (ambient {rho.ambient})")
        return 0
    raise UsageError(f"unknown rep action {args.action!r}")


def cmd_hasse(args) -> int:
    cfg = _config(args)
    bank = perfect.usable_bank(reps.rep_bank(cfg.bank_depth, cfg.prime, D222))
    levels = list(range(args.start, args.end + 1))
    dot = perfect.hasse_export(levels, bank)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot)
        print(f"wrote {args.dot}")
    else:
        print(dot, end="")
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    names = list(verify.REGISTRY) if args.check == "all" else [args.check]
    for name in names:
        if name not in verify.REGISTRY:
            raise UsageError(f"unknown check {name!r}; see 'modlat verify --list'")
    reports = verify.run_checks(names, cfg)
    for report in reports:
        print(report)
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modlat",
        description="Workbench for admissible and perfect elements of the "
                    "modular lattices D^{2,2,2} and D^4 over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="admissible sequences")
    p.add_argument("action", choices=["normalize", "equiv", "phi", "enum"])
    p.add_argument("word", nargs="*", help="digit words, e.g. 3213")
    p.add_argument("--lattice", default=D222)
    p.add_argument("--index", type=int, help="prepend index for phi")
    p.add_argument("--length", type=int, help="class length for enum")
    p.add_argument("--ending", type=int, help="fixed rightmost letter for enum")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("elem", help="build element terms")
    psub = p.add_subparsers(dest="elem_action", required=True)
    pb = psub.add_parser("build")
    pb.add_argument("--lattice", default=D222)
    pb.add_argument("--family", required=True,
                    choices=["f", "e", "g0", "f0", "e~", "f0~"])
    pb.add_argument("--alpha", required=True, help="admissible word")
    pb.add_argument("--form", default="table", choices=["table", "a", "A", "S"])
    pb.set_defaults(func=cmd_elem)

    p = sub.add_parser("eval", help="evaluate a term against a representation file")
    p.add_argument("--rep", required=True)
    p.add_argument("term", nargs="?")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rep", help="representation utilities")
    p.add_argument("action", choices=["bank", "coxeter", "random"])
    p.add_argument("--lattice", default=D222)
    p.add_argument("--prime", type=int, default=5)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--op", choices=["plus", "minus"], default="minus")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", default="rep.out")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("hasse", help="export Hasse diagrams as DOT")
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--to", dest="end", type=int, default=1)
    p.add_argument("--dot", help="output file (stdout when omitted)")
    _add_config_args(p)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser(
        "verify",
        help="run named checks ('all' runs the registry)",
        epilog="Checks: " + "; ".join(f"{k}: {v}" for k, v in verify.CHECK_DOC.items()),
        formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("check")
    _add_config_args(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        # tolerate positionals after options (argparse limitation), e.g.
        # `seq equiv --lattice d4 1321 1421`
        args, extra = ap.parse_known_args(argv)
        if extra:
            bad = [tok for tok in extra if tok.startswith("-")]
            if bad or not hasattr(args, "word") and not hasattr(args, "term"):
                ap.error(f"unrecognized arguments: {' '.join(extra)}")
            if hasattr(args, "word"):
                args.word = list(args.word) + extra
            elif getattr(args, "term", None) is None:
                args.term = extra[0]
        if hasattr(args, "word") and not args.word and args.action != "enum":
            raise UsageError("missing word argument")
        if getattr(args, "command", None) == "eval" and args.term is None:
            raise UsageError("missing term argument")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (seqs.SequenceError, el.ElementError, TermError, repio.RepIOError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
