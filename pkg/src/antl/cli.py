"""Command line interface.

Every index at this boundary is a circle label ``0..n-1``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .center import central_generator, e_word, enumerate_basis, factorize
from .checks import SUITES, run_suite
from .element import Element
from .embeddings import embed_word
from .fock import Config, act_word, full_matrix, matrix_block
from .normal_form import ZERO, canonical_word, normalize, psi
from .words import parse_word


def _labels(text: str) -> list[int]:
    return [int(t) for t in re.split(r"[\s,]+", text.strip().strip("()")) if t]


def _word_arg(args) -> str:
    text = args.word if args.word is not None else getattr(args, "word_pos", None)
    if text is None:
        raise ValueError("a word is required (positional or --word)")
    return text


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_normalize(args) -> int:
    w = parse_word(args.n, _word_arg(args))
    nf = normalize(w)
    payload = {"n": args.n, "word": list(w.letters), "normal_form": str(nf)}
    if nf is not ZERO:
        payload["canonical"] = list(canonical_word(nf).letters)
        if not nf.is_one:
            key = psi(nf)
            payload["psi"] = {"i_in": sorted(key.i_in), "i_out": sorted(key.i_out), "ell": key.ell}
    _emit(args, str(nf), payload)
    return 0


def _cmd_act(args) -> int:
    w = parse_word(args.n, _word_arg(args))
    if args.config is None:
        raise ValueError("--config is required")
    c = Config.from_labels(args.n, _labels(args.config))
    res = act_word(w, c)
    if res is None:
        _emit(args, "0", {"n": args.n, "result": None})
        return 0
    poly, out = res
    _emit(args, f"{poly} · {out}", {"n": args.n, "poly": poly.to_pairs(), "config": list(out.labels())})
    return 0


def _cmd_matrix(args) -> int:
    e = Element.from_word(parse_word(args.n, _word_arg(args)))
    blocks = {args.k: matrix_block(e, args.k)} if args.k is not None else full_matrix(e)
    if args.format == "json":
        print("\n".join(m.to_json() for m in blocks.values()))
        return 0
    for k, m in blocks.items():
        print(f"k={k}")
        for (r, c), p in sorted(m.entries.items(), key=lambda kv: (kv[0][1].labels(), kv[0][0].labels())):
            print(f"  {c} -> {r}: {p}")
    return 0


def _cmd_center(args) -> int:
    if args.k is None:
        raise ValueError("--k is required")
    t = central_generator(args.k, args.n)
    payload = {"n": args.n, "k": args.k, "terms": [[list(w), c] for w, c in t.terms.items()]}
    _emit(args, str(t), payload)
    return 0


def _cmd_e_word(args) -> int:
    if args.I is None or args.J is None:
        raise ValueError("--I and --J are required")
    w = e_word(_labels(args.I), _labels(args.J), args.n)
    _emit(args, str(w), {"n": args.n, "word": list(w.letters)})
    return 0


def _cmd_factorize(args) -> int:
    label = factorize(parse_word(args.n, _word_arg(args)))
    payload = {"k": label.k, "ell": label.ell, "I": list(label.i_out), "J": list(label.i_in)}
    _emit(args, str(label), payload)
    return 0


def _cmd_embed(args) -> int:
    if args.m is None:
        raise ValueError("--m is required")
    w = embed_word(args.m, parse_word(args.n, _word_arg(args)))
    _emit(args, str(w), {"n": w.n, "m": args.m, "word": list(w.letters)})
    return 0


def _cmd_enumerate(args) -> int:
    basis = enumerate_basis(args.n, args.ell_max)
    if args.format == "json":
        rows = [
            {"k": l.k, "ell": l.ell, "I": list(l.i_out), "J": list(l.i_in), "word": list(w.letters)}
            for l, w in basis
        ]
        print(json.dumps({"n": args.n, "basis": rows}, sort_keys=True))
    else:
        for label, w in basis:
            print(f"{label}: {w}")
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, args.n)
    if args.format == "json":
        print(json.dumps([vars(r) for r in results], sort_keys=True))
    else:
        for r in results:
            print(r)
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "normalize": _cmd_normalize,
    "act": _cmd_act,
    "matrix": _cmd_matrix,
    "center": _cmd_center,
    "e-word": _cmd_e_word,
    "factorize": _cmd_factorize,
    "embed": _cmd_embed,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def _rank(text: str) -> int:
    n = int(text)
    if n < 3:
        raise argparse.ArgumentTypeError(f"rank must be at least 3, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antl", description="Affine nilTemperley-Lieb toolkit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_rank, required=True, help="rank N >= 3")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("normalize", "act", "matrix", "factorize", "embed"):
            p.add_argument("word_pos", nargs="?", metavar="WORD")
            p.add_argument("--word")
        if name == "act":
            p.add_argument("--config", help="circle labels of occupied sites")
        if name in ("matrix", "center"):
            p.add_argument("--k", type=int)
        if name == "e-word":
            p.add_argument("--I", dest="I", help="output configuration")
            p.add_argument("--J", dest="J", help="input configuration")
        if name == "embed":
            p.add_argument("--m", type=int)
        if name == "enumerate":
            p.add_argument("--ell-max", type=int, default=0)
        if name == "verify":
            p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"antl {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
