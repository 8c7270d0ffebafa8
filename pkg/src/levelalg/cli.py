"""Command-line front end.

Every subcommand wraps exactly one library operation and prints structured
`key: value` lines (or one JSON object per line with --format json-lines).
Exit codes: 0 success, 2 domain error, 1 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import apolarity, bott, levelhf, resolution, schubert, secant, tangent
from .errors import LevelAlgError
from .forms import form_parse, form_print, parse_subspace_lines
from .kronecker import DEFAULT_WEIGHT_CAP
from .kronecker import kronecker as kronecker_coefficient
from .levelhf import HilbertFunction


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"usage error: {message}\n")
        sys.exit(1)


class Emitter:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.pairs: list[tuple[str, str]] = []

    def emit(self, key: str, value):
        self.pairs.append((key, str(value)))

    def flush(self):
        for key, value in self.pairs:
            if self.fmt == "json-lines":
                print(json.dumps({"key": key, "value": value}))
            else:
                print(f"{key}: {value}")


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise LevelAlgError(f"cannot read {path}: {exc.strerror}") from exc


def _subspace_from_input(args, nvars=None):
    if not args.input:
        raise LevelAlgError("this subcommand needs --input FILE (one form per line)")
    return parse_subspace_lines(_read_lines(args.input), nvars=nvars)


def _forms_from_input(args, nvars=None, ring=None) -> list:
    if not args.input:
        raise LevelAlgError("this subcommand needs --input FILE (one form per line)")
    out = []
    for line in _read_lines(args.input):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(form_parse(line, nvars=nvars, ring=ring))
    if not out:
        raise LevelAlgError("no forms in input")
    return out


def _cmd_hf_check(args, em: Emitter):
    ok, idx = levelhf.is_level_sequence(
        [int(p) for p in args.sequence.split(",") if p.strip() != ""]
    )
    em.emit("valid", "true" if ok else "false")
    if not ok:
        em.emit("failing_index", idx)


def _cmd_hf_enumerate(args, em: Emitter):
    hs = levelhf.enumerate_level_hf(args.t, args.d)
    em.emit("count", len(hs))
    for k, h in enumerate(hs, start=1):
        em.emit(f"hf.{k}", h.format())
        em.emit(f"dim.{k}", levelhf.dim_stratum(h))


def _cmd_hf_partition(args, em: Emitter):
    if args.mu is not None:
        if args.t is None or args.d is None:
            raise LevelAlgError("--mu needs -t and -d")
        mu = levelhf.partition_parse(args.mu)
        h = levelhf.hf_from_partition(mu, args.t, args.d)
        em.emit("hf", h.format())
    else:
        if not args.sequence:
            raise LevelAlgError("give a Hilbert function or --mu PARTITION with -t -d")
        h = HilbertFunction.parse(args.sequence)
        mu = levelhf.partition_from_hf(h)
        em.emit("partition", levelhf.partition_format(mu))
        em.emit("t", h.t)
        em.emit("d", h.d)


def _cmd_burch(args, em: Emitter):
    h = HilbertFunction.parse(args.sequence)
    matrix, gens = levelhf.burch_ideal(h)
    em.emit("q", ",".join(str(q) for q in levelhf.q_sequence(h)))
    e_seq = levelhf.e_sequence(h)
    em.emit("e", ",".join(str(e) for e in e_seq))
    for k, row in enumerate(matrix.entries, start=1):
        em.emit(f"matrix.row{k}",
                ", ".join(form_print(x) if x is not None else "0" for x in row))
    for k, g in enumerate(gens, start=1):
        em.emit(f"generator.{k}", form_print(g))
    em.emit("dim_stratum", levelhf.dim_stratum(h))


def _cmd_hilbert(args, em: Emitter):
    lam = _subspace_from_input(args)
    profile = apolarity.apolar_profile(lam)
    for key, value in profile.kv_lines():
        em.emit(key, value)


def _cmd_ann(args, em: Emitter):
    lam = _subspace_from_input(args)
    if args.i is not None:
        sl = apolarity.ann_slice(lam, args.i)
        em.emit("degree", sl.degree)
        em.emit("dim", sl.subspace.dim)
        for k, b in enumerate(sl.subspace.basis, start=1):
            em.emit(f"basis.{k}", form_print(b))
    else:
        for degree, gens in apolarity.minimal_generators(lam):
            for g in gens:
                em.emit(f"GENERATORS.{degree}", form_print(g))


def _cmd_socle(args, em: Emitter):
    gens = _forms_from_input(args, ring="R")
    nvars = max(g.nvars for g in gens)
    gens = [form_parse(form_print(g), nvars=nvars) for g in gens]
    soc = apolarity.socle(gens, nvars)
    em.emit("SOCLE", "; ".join(f"{j}:{s}" for j, s in soc))
    em.emit("LEVEL", "true" if len(soc) == 1 else "false")
    em.emit("SOCLE_DEGREE", soc[-1][0])
    em.emit("TYPE", soc[-1][1])


def _cmd_tangent(args, em: Emitter):
    lam = _subspace_from_input(args)
    ts = tangent.tangent_space(lam)
    em.emit("dimension", ts.dimension)
    if args.shape:
        em.emit("constraints", f"{ts.constraint_shape[0]}x{ts.constraint_shape[1]}")
    if lam.nvars == 2:
        h = apolarity.hilbert_function(lam)
        em.emit("formula", tangent.tangent_dim_formula(h))
    else:
        em.emit("note", "n >= 3: dimension unverified against a closed formula")


def _cmd_secant_decompose(args, em: Emitter):
    lam = _subspace_from_input(args)
    planes = secant.secant_decompose(lam)
    em.emit("count", len(planes))
    for k, p in enumerate(planes, start=1):
        em.emit(f"plane.{k}.degree", p.q)
        em.emit(f"plane.{k}.dim", p.plane_dim)
        em.emit(f"plane.{k}.apolar", form_print(p.apolar_form))


def _cmd_secant_intersect(args, em: Emitter):
    if args.d is None:
        raise LevelAlgError("need -d AMBIENT_DEGREE")
    ops = _forms_from_input(args, nvars=2, ring="R")
    planes = [secant.SecantPlane(u, args.d) for u in ops]
    lam, h = secant.secant_intersect(planes)
    em.emit("hf", h.format())
    em.emit("dim", lam.dim)
    for k, b in enumerate(lam.basis, start=1):
        em.emit(f"basis.{k}", form_print(b))


def _cmd_gad(args, em: Emitter):
    if args.d is None:
        raise LevelAlgError("need -d AMBIENT_DEGREE")
    if not args.input:
        raise LevelAlgError("need --input FILE with lines 'a,b,alpha'")
    points, alphas = [], []
    for line in _read_lines(args.input):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        a, b, alpha = (p.strip() for p in line.split(","))
        from fractions import Fraction

        points.append((Fraction(a), Fraction(b)))
        alphas.append(int(alpha))
    g = secant.GAD(tuple(points), tuple(alphas))
    sub = secant.gad_subspace(g, args.d)
    em.emit("length", g.length)
    em.emit("dim", sub.dim)
    for k, b in enumerate(sub.basis, start=1):
        em.emit(f"basis.{k}", form_print(b))


def _cmd_sigma_dim(args, em: Emitter):
    em.emit("dim", secant.sigma_dim(args.t, args.d, args.s))
    n1 = args.s + args.t * (args.s - args.t)
    n2 = args.t * (args.d - args.t + 1)
    em.emit("N1", n1)
    em.emit("N2", n2)


def _cmd_waring_witness(args, em: Emitter):
    h = secant.waring_witness_hf(args.t, args.d, args.s)
    em.emit("hf", h.format())
    em.emit("dim", levelhf.dim_stratum(h))


def _cmd_in_sigma(args, em: Emitter):
    lam = _subspace_from_input(args)
    w = secant.in_sigma(lam, args.s)
    em.emit("member", "true" if w is not None else "false")
    if w is not None:
        em.emit("witness", form_print(w))


def _cmd_stacked_det(args, em: Emitter):
    fs = _forms_from_input(args, nvars=2, ring="S")
    from .errors import NotSquareError

    try:
        value = secant.stacked_catalecticant_det(fs, args.s)
        em.emit("det", value)
        em.emit("member", "true" if value == 0 else "false")
    except NotSquareError as exc:
        em.emit("rank", exc.rank)
        em.emit("bound", exc.bound)
        em.emit("member", "true" if exc.rank <= exc.bound else "false")


def _cmd_hankel_rank(args, em: Emitter):
    f = form_parse(args.form, nvars=2, ring="S")
    em.emit("rank", secant.hankel_rank(f, args.i))


def _cmd_schubert_mul(args, em: Emitter):
    n = args.d + 1
    a = schubert.parse_class(args.a, args.t, n)
    b = schubert.parse_class(args.b, args.t, n)
    em.emit("product", schubert.format_class(schubert.lr_multiply(a, b)))


def _cmd_porteous(args, em: Emitter):
    cls = schubert.porteous_class(args.t, args.d, args.i, args.r)
    em.emit("class", schubert.format_class(cls))
    em.emit("codim", resolution.expected_codim(args.t, args.d, args.i, args.r))


def _cmd_bott(args, em: Emitter):
    text = args.gamma
    if ";" in text:
        blocks = [seg for seg in text.split(";")]
        gamma = []
        sizes = []
        for seg in blocks:
            vals = [int(p) for p in seg.split(",") if p.strip() != ""]
            gamma.extend(vals)
            sizes.append(len(vals))
        res = bott.bott_cohomology(gamma, blocks=tuple(sizes))
    else:
        gamma = [int(p) for p in text.split(",") if p.strip() != ""]
        res = bott.bott_cohomology(gamma)
    if res.is_zero:
        em.emit("cohomology", "ZERO")
    else:
        em.emit("degree", res.degree)
        em.emit("dim", res.dimension)


def _cmd_kronecker(args, em: Emitter):
    from .partitions import parse_partition

    lam = parse_partition(args.lam)
    rho = parse_partition(args.rho)
    mu = parse_partition(args.mu)
    em.emit("coefficient", kronecker_coefficient(lam, rho, mu, cap=args.cap_weight))


def _cmd_lascoux_ranks(args, em: Emitter):
    table = resolution.lascoux_ranks(args.t, args.d, args.i, args.r)
    em.emit("codim", table.codim)
    em.emit("ranks", ",".join(str(x) for x in table.ranks()))
    for p in sorted(table.terms, reverse=True):
        for s in table.terms[p]:
            lam_text = ",".join(str(x) for x in s.lam) if s.lam else "0"
            em.emit(f"term.{-p}", f"lambda=({lam_text}) rank={s.rank}")


def _cmd_components(args, em: Emitter):
    rep = resolution.c1_c2_analysis(args.t, args.d, args.i, args.r)
    em.emit("C2", "true" if rep.c2_holds else "false")
    em.emit("C2_strict", "true" if rep.c2_strict else "false")
    if rep.c2_witness is not None:
        em.emit("C2_witness", rep.c2_witness.format())
    em.emit("expected_codim", rep.expected_codim)
    em.emit("C1", "true" if rep.c1_holds else "false")
    em.emit("count", len(rep.candidates))
    for k, (h, dim, codim) in enumerate(rep.candidates, start=1):
        em.emit(f"component.{k}.hf", h.format())
        em.emit(f"component.{k}.dim", dim)
        em.emit(f"component.{k}.codim", codim)
    em.emit("note", "components = maximal admissible strata (assumption)")


def _cmd_e1_table(args, em: Emitter):
    table = resolution.e1_vanishing_table(args.t, args.d, args.i, args.r,
                                          args.m, cap_weight=args.cap_weight)
    if table.truncated:
        em.emit("truncated_weights",
                ",".join(str(w) for w in table.truncated_weights))
    if not table.entries:
        em.emit("entries", "none")
    for (p, q) in sorted(table.entries):
        em.emit(f"E1.{p}.{q}", table.entries[(p, q)])


_COMMANDS = {
    "hf-check": (_cmd_hf_check, "validity of a level Hilbert function"),
    "hf-enumerate": (_cmd_hf_enumerate, "all level Hilbert functions of type (t, d)"),
    "hf-partition": (_cmd_hf_partition, "partition bijection, either direction"),
    "burch": (_cmd_burch, "Hilbert-Burch matrix and witness ideal"),
    "hilbert": (_cmd_hilbert, "Hilbert function / generators / socle of a subspace"),
    "ann": (_cmd_ann, "annihilator slice (-i) or minimal generators"),
    "socle": (_cmd_socle, "socle of an ideal given by generators"),
    "tangent": (_cmd_tangent, "tangent-space dimension at a subspace"),
    "secant-decompose": (_cmd_secant_decompose, "secant planes through a subspace"),
    "secant-intersect": (_cmd_secant_intersect, "intersect secant planes (-d, apolar forms)"),
    "gad": (_cmd_gad, "subspace of forms with a prescribed GAD pattern"),
    "sigma-dim": (_cmd_sigma_dim, "dimension of the secant locus Sigma_s"),
    "waring-witness": (_cmd_waring_witness, "witness Hilbert function for Sigma_s"),
    "in-sigma": (_cmd_in_sigma, "membership in Sigma_s with witness"),
    "stacked-det": (_cmd_stacked_det, "stacked catalecticant determinant"),
    "hankel-rank": (_cmd_hankel_rank, "rank of the Hankel matrix of a binary form"),
    "schubert-mul": (_cmd_schubert_mul, "Littlewood-Richardson product of classes"),
    "porteous": (_cmd_porteous, "Porteous class of a rank locus"),
    "bott": (_cmd_bott, "Bott cohomology of a weight sequence"),
    "kronecker": (_cmd_kronecker, "Kronecker coefficient of three partitions"),
    "lascoux-ranks": (_cmd_lascoux_ranks, "resolution term ranks of a rank locus"),
    "components": (_cmd_components, "C1/C2 analysis with candidate components"),
    "e1-table": (_cmd_e1_table, "E1 page of the twisted spectral sequence"),
}


def build_parser() -> _Parser:
    parser = _Parser(prog="levelalg",
                     description="exact computations with level algebras")
    parser.add_argument("--format", choices=("keyvalue", "json-lines"),
                        default="keyvalue")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-t", type=int, default=None)
        p.add_argument("-d", type=int, default=None)
        p.add_argument("-i", type=int, default=None)
        p.add_argument("-r", type=int, default=None)
        p.add_argument("-s", type=int, default=None)
        p.add_argument("-m", type=int, default=None)
        p.add_argument("--cap-weight", type=int, default=DEFAULT_WEIGHT_CAP)
        p.add_argument("--input", default=None, metavar="FILE")
        p.add_argument("--shape", action="store_true")
        p.add_argument("--mu", default=None)
        if name in ("hf-check", "hf-partition", "burch"):
            p.add_argument("sequence", nargs="?", default=None)
        if name == "hankel-rank":
            p.add_argument("form")
        if name == "schubert-mul":
            p.add_argument("a")
            p.add_argument("b")
        if name == "bott":
            p.add_argument("gamma")
        if name == "kronecker":
            p.add_argument("lam")
            p.add_argument("rho")
            p.add_argument("mu_arg")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "mu_arg", None) is not None:
        args.mu = args.mu_arg
    handler = _COMMANDS[args.command][0]
    em = Emitter(args.format)
    required = {
        "hf-check": ("sequence",), "burch": ("sequence",),
        "hf-enumerate": ("t", "d"), "sigma-dim": ("t", "d", "s"),
        "waring-witness": ("t", "d", "s"),
        "hilbert": ("input",), "ann": ("input",), "socle": ("input",),
        "tangent": ("input",), "secant-decompose": ("input",),
        "secant-intersect": ("input", "d"), "gad": ("input", "d"),
        "in-sigma": ("input", "s"), "stacked-det": ("input", "s"),
        "hankel-rank": ("i",),
        "schubert-mul": ("t", "d"), "porteous": ("t", "d", "i", "r"),
        "lascoux-ranks": ("t", "d", "i", "r"),
        "components": ("t", "d", "i", "r"),
        "e1-table": ("t", "d", "i", "r", "m"),
    }
    for field in required.get(args.command, ()):
        if getattr(args, field, None) is None:
            if len(field) == 1:
                parser.error(f"{args.command} requires -{field}")
            elif field == "input":
                parser.error(f"{args.command} requires --input FILE")
            else:
                parser.error(f"{args.command} requires {field}")
    if args.command == "hf-partition" and args.sequence is None and args.mu is None:
        parser.error("hf-partition needs a Hilbert function or --mu with -t -d")
    try:
        handler(args, em)
    except LevelAlgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    em.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
