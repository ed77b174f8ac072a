"""Command-line front end: constructions, checks, sweeps, and replayable
certificates with stable on-disk formats.

Set files and certificates are canonical JSON: keys sorted, no insignificant
whitespace, one trailing newline.  A certificate's digest is the SHA-256 of
the canonical serialization of its format_version/kind/parameters/payload --
never of wall time or worker count, so `--jobs 1` and `--jobs 8` emit
byte-identical files.  The default job count comes from the TRANSVERSE_JOBS
environment variable, falling back to the machine's CPU count.

Exit codes: 0 verified/success, 1 verification failed (claim false or
certificate invalid), 2 usage or file-format error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .bilinear import BilinearVerdict, FormSpace, ann, is_bilinear
from .constructions import build_P_sigma, build_P_xi, f3_example, random_sigma, sigma_fig2
from .counting import bijection_vs_projective, inequality_check, n0_estimate
from .explorer import (
    SweepReport,
    classify_hyperplane_fibers,
    exhaustive_subset_sweep,
    fundamental_sweep,
    search_sigma,
    verify_collineation_lemma,
    xi_line_sweep,
)
from .fpcore import CapExceeded, Subspace, is_prime
from .pairsets import PairSet, phi, transversality_violation

__all__ = [
    "FORMAT_VERSION",
    "JOBS_ENV",
    "FileFormatError",
    "canonical_json",
    "content_digest",
    "main",
    "make_certificate",
    "read_certificate",
    "read_set",
    "report_certificate",
    "run",
    "set_document",
    "set_from_document",
    "write_document",
]

FORMAT_VERSION = 1
JOBS_ENV = "TRANSVERSE_JOBS"

FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class FileFormatError(ValueError):
    """A set or certificate file failed structural validation."""


# ----------------------------------------------------------- serialization


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def content_digest(doc: dict) -> str:
    body = {key: doc[key] for key in ("format_version", "kind", "parameters", "payload")}
    return hashlib.sha256(canonical_json(body).encode("ascii")).hexdigest()


def make_certificate(kind: str, parameters: dict, payload: dict) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "parameters": parameters,
        "payload": payload,
    }
    doc["digest"] = content_digest(doc)
    return doc


def report_certificate(report: SweepReport) -> dict:
    """Certificate for a sweep: the sweep name joins the parameters, the
    digestable payload is exactly the report's canonical payload."""
    c = report.canonical()
    return make_certificate("sweep_report", {"sweep": c["kind"], **c["parameters"]}, c["payload"])


def write_document(doc: dict, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(canonical_json(doc))


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="ascii") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not valid JSON (line {exc.lineno}: {exc.msg})")
    if not isinstance(doc, dict):
        raise FileFormatError(f"{path}: top level must be an object")
    return doc


def _expect(doc: dict, field: str, types, path: str):
    if field not in doc:
        raise FileFormatError(f"{path}: missing field '{field}'")
    value = doc[field]
    if not isinstance(value, types) or isinstance(value, bool) and types is int:
        raise FileFormatError(f"{path}: field '{field}' has the wrong type")
    return value


def set_document(a: PairSet) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "p": a.p,
        "n1": a.n1,
        "n2": a.n2,
        "pairs": [[x, y] for x, y in sorted(a.pair_indices())],
    }


def set_from_document(doc: dict, path: str = "<set>") -> PairSet:
    version = _expect(doc, "format_version", int, path)
    if version != FORMAT_VERSION:
        raise FileFormatError(f"{path}: unsupported format_version {version}")
    p = _expect(doc, "p", int, path)
    n1 = _expect(doc, "n1", int, path)
    n2 = _expect(doc, "n2", int, path)
    if not is_prime(p):
        raise FileFormatError(f"{path}: field 'p' must be prime, got {p}")
    if n1 < 1 or n2 < 1:
        raise FileFormatError(f"{path}: dimensions must be positive")
    pairs = _expect(doc, "pairs", list, path)
    m1, m2 = p**n1, p**n2
    previous = None
    for position, entry in enumerate(pairs):
        where = f"{path}: pairs[{position}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in entry)
        ):
            raise FileFormatError(f"{where}: expected a pair of integers")
        x, y = entry
        if not 0 <= x < m1:
            raise FileFormatError(f"{where}: x index {x} out of range [0, {m1})")
        if not 0 <= y < m2:
            raise FileFormatError(f"{where}: y index {y} out of range [0, {m2})")
        if previous is not None and (x, y) <= previous:
            raise FileFormatError(f"{where}: pairs must be strictly ascending")
        previous = (x, y)
    return PairSet.from_pairs(p, n1, n2, [tuple(e) for e in pairs])


def read_set(path: str) -> PairSet:
    return set_from_document(_load_json(path), path)


def read_certificate(path: str) -> dict:
    doc = _load_json(path)
    version = _expect(doc, "format_version", int, path)
    if version != FORMAT_VERSION:
        raise FileFormatError(f"{path}: unsupported format_version {version}")
    kind = _expect(doc, "kind", str, path)
    if kind not in ("transverse_check", "bilinear", "non_bilinear", "sweep_report"):
        raise FileFormatError(f"{path}: unknown certificate kind {kind!r}")
    _expect(doc, "parameters", dict, path)
    _expect(doc, "payload", dict, path)
    _expect(doc, "digest", str, path)
    return doc


# --------------------------------------------------------- payload builders


def _basis_rows(s: Subspace) -> list:
    return [list(row) for row in s.basis]


def _form_matrices(space: FormSpace) -> list:
    return [[list(row) for row in mat] for mat in space.basis]


def _set_payload(a: PairSet, verdict: BilinearVerdict) -> dict:
    payload = {
        "pairs": [[x, y] for x, y in sorted(a.pair_indices())],
        "size": a.size,
        "status": verdict.status,
        "w1": _basis_rows(verdict.w1),
        "w2": _basis_rows(verdict.w2),
        "r1": verdict.r1,
        "r2": verdict.r2,
        "r3": verdict.r3,
        "ann_basis": _form_matrices(verdict.ann),
        "closure_size": verdict.closed.size,
        "witness": list(verdict.witness) if verdict.witness is not None else None,
        "non_subspace_axis": verdict.non_subspace_axis,
    }
    if verdict.ann.dim <= 4:
        payload["ann_elements"] = sorted(
            [list(c for row in mat for c in row) for mat in verdict.ann.elements()]
        )
    return payload


def _transverse_payload(a: PairSet) -> dict:
    fiberwise = transversality_violation(a, "fiberwise")
    direct = transversality_violation(a, "direct")
    return {
        "pairs": [[x, y] for x, y in sorted(a.pair_indices())],
        "size": a.size,
        "transverse": fiberwise is None,
        "modes_agree": (fiberwise is None) == (direct is None),
        "violation": None
        if fiberwise is None
        else [fiberwise[0], list(fiberwise[1])],
    }


def _set_parameters(a: PairSet) -> dict:
    return {"p": a.p, "n1": a.n1, "n2": a.n2}


# ------------------------------------------------------------ verify logic


def _emit(lines: list, ok: bool, text: str) -> bool:
    lines.append(("ok   " if ok else "FAIL ") + text)
    return ok


def _verify_f3(jobs: int) -> tuple[bool, dict, dict, list]:
    a = f3_example()
    verdict = is_bilinear(a)
    lines: list[str] = []
    ok = _emit(lines, a.size == 29, f"size is {a.size}, expected 29")
    ok &= _emit(
        lines,
        transversality_violation(a, "fiberwise") is None
        and transversality_violation(a, "direct") is None,
        "transverse in both fiberwise and direct modes",
    )
    ok &= _emit(
        lines,
        verdict.ann.basis == (((1, 0), (0, 2)),),
        "annihilator is spanned by diag(1, 2)",
    )
    ok &= _emit(lines, verdict.closed.size == 33, f"closure size is {verdict.closed.size}, expected 33")
    ok &= _emit(lines, verdict.witness == (4, 4), "closure witness is ((1,1),(1,1))")
    ok &= _emit(lines, verdict.status == "non_bilinear", f"verdict is {verdict.status}")
    payload = _set_payload(a, verdict)
    payload["transverse"] = True
    return ok, {"construction": "f3", "p": 3, "n": 2}, payload, lines


_SIGMA_ANN_ELEMENTS = sorted(
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1, 1, 0],
    ]
)


def _verify_sigma_fig2(jobs: int) -> tuple[bool, dict, dict, list]:
    a = build_P_sigma(sigma_fig2())
    verdict = is_bilinear(a)
    lines: list[str] = []
    ok = _emit(lines, a.size == 22, f"size is {a.size}, expected 22")
    ok &= _emit(
        lines,
        transversality_violation(a) is None,
        "the span set is transverse",
    )
    elements = sorted([list(c for row in m for c in row) for m in verdict.ann.elements()])
    ok &= _emit(
        lines,
        verdict.ann.dim == 2 and elements == _SIGMA_ANN_ELEMENTS,
        "annihilator is the displayed 4-element form space",
    )
    ok &= _emit(
        lines,
        verdict.closed.contains(1, 2) and not a.contains(1, 2),
        "closure gains ((1,0,0),(0,1,0))",
    )
    ok &= _emit(lines, verdict.status == "non_bilinear", f"verdict is {verdict.status}")
    payload = _set_payload(a, verdict)
    payload["transverse"] = True
    return ok, {"construction": "sigma-fig2", "p": 2, "n": 3}, payload, lines


def _sweep_lines(report: SweepReport) -> list:
    lines = [
        f"{'ok   ' if report.ok else 'FAIL '}{report.kind} {report.parameters}: "
        + " ".join(f"{k}={v}" for k, v in sorted(report.counts.items()))
    ]
    for witness in report.witnesses[:8]:
        lines.append(f"     witness: {witness}")
    return lines


def _counting_payload() -> tuple[bool, dict]:
    equal, strict = [], []
    for p in (2, 3):
        b, pr = bijection_vs_projective(p)
        equal.append([p, b, pr])
    for p in FIRST_PRIMES[2:12]:
        b, pr = bijection_vs_projective(p)
        strict.append([p, b, pr])
    n0_rows = [[p, n0_estimate(p, "stirling")] for p in FIRST_PRIMES]
    payload = {
        "bijections_equal": equal,
        "bijections_strict": strict,
        "exact_13_2_violated": inequality_check(13, 2, "exact_factorial"),
        "exact_11_2_violated": inequality_check(11, 2, "exact_factorial"),
        "n0_stirling": n0_rows,
    }
    ok = (
        all(b == pr for _, b, pr in equal)
        and all(b > pr for _, b, pr in strict)
        and payload["exact_13_2_violated"]
        and not payload["exact_11_2_violated"]
        and all(n0 is not None and n0 <= 11 for _, n0 in n0_rows)
    )
    payload["ok"] = ok
    return ok, payload


def _verify_counting() -> tuple[bool, dict, dict, list]:
    ok, payload = _counting_payload()
    lines = []
    for p, b, pr in payload["bijections_equal"]:
        _emit(lines, b == pr, f"p={p}: (p+1)! = {b} equals projective count {pr}")
    for p, b, pr in payload["bijections_strict"]:
        _emit(lines, b > pr, f"p={p}: (p+1)! = {b} exceeds projective count {pr}")
    _emit(lines, payload["exact_13_2_violated"], "exact factorial beats the bound at (13, 2)")
    _emit(lines, not payload["exact_11_2_violated"], "exact factorial stays below the bound at (11, 2)")
    for p, n0 in payload["n0_stirling"]:
        _emit(lines, n0 is not None and n0 <= 11, f"p={p}: stirling threshold n0 = {n0} <= 11")
    return ok, {"sweep": "counting"}, payload, lines


def _classification_bundle(jobs: int) -> tuple[bool, dict, dict, list]:
    reports = [
        classify_hyperplane_fibers(2, 2, jobs=jobs),
        classify_hyperplane_fibers(3, 2, jobs=jobs),
        xi_line_sweep(5, jobs=jobs),
    ]
    lines = []
    for report in reports:
        lines.extend(_sweep_lines(report))
    ok = all(r.ok for r in reports)
    payload = {"reports": [r.canonical() for r in reports], "ok": ok}
    return ok, {"sweep": "classification_bundle"}, payload, lines


# ------------------------------------------------------------------ replay


def _replay_set_certificate(cert: dict) -> tuple[bool, list]:
    parameters, payload = cert["parameters"], cert["payload"]
    a = PairSet.from_pairs(
        parameters["p"], parameters["n1"], parameters["n2"],
        [tuple(e) for e in payload["pairs"]],
    ) if "n1" in parameters else None
    if a is None:
        # construction certificates carry (construction, p, n) parameters
        a = PairSet.from_pairs(
            parameters["p"],
            parameters["n"],
            parameters["n"],
            [tuple(e) for e in payload["pairs"]],
        )
    lines = []
    if cert["kind"] == "transverse_check":
        fresh = _transverse_payload(a)
        ok = _emit(lines, fresh == payload, "transversality payload reproduces")
        return ok, lines
    verdict = is_bilinear(a)
    fresh = _set_payload(a, verdict)
    if "transverse" in payload:
        fresh["transverse"] = transversality_violation(a) is None
    ok = _emit(lines, canonical_json(fresh) == canonical_json(payload), "set payload reproduces")
    expected_kind = "bilinear" if verdict.status == "bilinear" else "non_bilinear"
    ok &= _emit(lines, cert["kind"] == expected_kind, f"kind matches fresh verdict {verdict.status}")
    # independent witness / vanishing checks straight from the serialized data
    for mat in payload["ann_basis"]:
        vanishes = all(
            sum(mat[i][j] * xc[i] * yc[j] for i in range(len(mat)) for j in range(len(mat[0])))
            % a.p
            == 0
            for xc, yc in (
                (tuple((x // a.p**k) % a.p for k in range(a.n1)),
                 tuple((y // a.p**k) % a.p for k in range(a.n2)))
                for x, y in payload["pairs"]
            )
        ) if mat else True
        ok &= _emit(lines, vanishes, "annihilator basis form vanishes on the set")
    if payload.get("witness") is not None:
        x, y = payload["witness"]
        ok &= _emit(
            lines,
            verdict.closed.contains(x, y) and not a.contains(x, y),
            "witness pair lies in the closure but not the set",
        )
    return ok, lines


_SWEEP_RUNNERS = {
    "exhaustive_subset_sweep": lambda prm, jobs: exhaustive_subset_sweep(prm["p"], prm["n"], jobs=jobs),
    "classify_hyperplane_fibers": lambda prm, jobs: classify_hyperplane_fibers(prm["p"], prm["n"], jobs=jobs),
    "search_sigma": lambda prm, jobs: search_sigma(
        prm["p"], prm["n"], mode=prm["mode"],
        samples=prm.get("samples"), seed=prm.get("seed"), jobs=jobs,
    ),
    "verify_collineation_lemma": lambda prm, jobs: verify_collineation_lemma(
        prm["p"], prm["n_dom"], prm["n_cod"], jobs=jobs
    ),
    "fundamental_sweep": lambda prm, jobs: fundamental_sweep(prm["p"], prm["n"], jobs=jobs),
    "xi_line_sweep": lambda prm, jobs: xi_line_sweep(prm["p"], jobs=jobs),
}


def _replay_sweep_certificate(cert: dict, jobs: int) -> tuple[bool, list]:
    parameters = dict(cert["parameters"])
    sweep = parameters.pop("sweep", None)
    lines = []
    if sweep == "counting":
        ok, payload = _counting_payload()
        ok = _emit(lines, canonical_json(payload) == canonical_json(cert["payload"]),
                   "counting payload reproduces")
        return ok, lines
    if sweep == "classification_bundle":
        ok, _, payload, _ = _classification_bundle(jobs)
        ok = _emit(lines, canonical_json(payload) == canonical_json(cert["payload"]),
                   "classification bundle payload reproduces")
        return ok, lines
    runner = _SWEEP_RUNNERS.get(sweep)
    if runner is None:
        raise FileFormatError(f"certificate names unknown sweep {sweep!r}")
    report = runner(parameters, jobs)
    fresh = report.canonical()["payload"]
    ok = _emit(lines, canonical_json(fresh) == canonical_json(cert["payload"]),
               f"{sweep} payload reproduces")
    return ok, lines


# --------------------------------------------------------------- commands


def _cmd_construct(args) -> int:
    if args.what in ("p-sigma", "p-xi") and args.seed is None:
        print("construct: this construction requires an explicit --seed", file=sys.stderr)
        return 2
    if args.what == "f3":
        a = f3_example()
    elif args.what == "sigma-fig2":
        a = build_P_sigma(sigma_fig2())
    elif args.what == "p-sigma":
        a = build_P_sigma(random_sigma(args.p, args.n, args.seed), override_cap=args.override_cap)
    else:  # p-xi: W = {0} inside F_p^2, the image line is the whole plane
        xi = random_sigma(args.p, 2, args.seed)
        a = build_P_xi(Subspace.zero(args.p, 2), Subspace.full(args.p, 2), xi,
                       override_cap=args.override_cap)
    write_document(set_document(a), args.out)
    transverse = transversality_violation(a) is None
    print(f"wrote {args.out}: p={a.p} n1={a.n1} n2={a.n2} size={a.size} "
          f"transverse={'yes' if transverse else 'no'}")
    return 0


def _cmd_check(args) -> int:
    a = read_set(args.set)
    if args.what == "transverse":
        payload = _transverse_payload(a)
        cert = make_certificate("transverse_check", _set_parameters(a), payload)
        verdict_ok = payload["transverse"] and payload["modes_agree"]
        print(f"size={a.size} transverse={'yes' if payload['transverse'] else 'no'}")
        if payload["violation"] is not None:
            print(f"violation: {payload['violation'][0]} at pair {payload['violation'][1]}")
    else:
        verdict = is_bilinear(a)
        payload = _set_payload(a, verdict)
        kind = "bilinear" if verdict.status == "bilinear" else "non_bilinear"
        cert = make_certificate(kind, _set_parameters(a), payload)
        if args.what == "bilinear":
            verdict_ok = verdict.status == "bilinear"
            print(f"size={a.size} status={verdict.status} r1={verdict.r1} "
                  f"r2={verdict.r2} r3={verdict.r3}")
            if verdict.witness is not None:
                print(f"closure witness: {verdict.witness}")
        elif args.what == "ann":
            verdict_ok = True
            print(f"annihilator dimension {ann(a).dim} over the full ambient; "
                  f"{verdict.r3} over the projection spans")
            for mat in _form_matrices(ann(a)):
                print(f"  {mat}")
        else:  # closure
            verdict_ok = True
            print(f"closure size {verdict.closed.size} over spans of dims "
                  f"{verdict.w1.dim} x {verdict.w2.dim}; closed={verdict.closed.indicator == a.indicator}")
    if args.cert:
        write_document(cert, args.cert)
        print(f"certificate written to {args.cert}")
    return 0 if verdict_ok else 1


def _cmd_phi(args) -> int:
    a = read_set(args.set)
    image = phi(a, args.word)
    write_document(set_document(image), args.out)
    print(f"wrote {args.out}: size {a.size} -> {image.size} under word {args.word!r}")
    return 0


def _cmd_verify(args) -> int:
    jobs = args.jobs
    if args.what == "f3":
        ok, parameters, payload, lines = _verify_f3(jobs)
        cert = make_certificate("non_bilinear", parameters, payload)
    elif args.what == "sigma-fig2":
        ok, parameters, payload, lines = _verify_sigma_fig2(jobs)
        cert = make_certificate("non_bilinear", parameters, payload)
    elif args.what == "counting":
        ok, parameters, payload, lines = _verify_counting()
        cert = make_certificate("sweep_report", parameters, payload)
    elif args.what == "classification" and args.p is None:
        ok, parameters, payload, lines = _classification_bundle(jobs)
        cert = make_certificate("sweep_report", parameters, payload)
    else:
        p = args.p if args.p is not None else 2
        if args.what == "exhaustive":
            report = exhaustive_subset_sweep(p, args.n if args.n is not None else 2, jobs=jobs)
        elif args.what == "classification":
            if p == 5 and (args.n is None or args.n == 2) and args.mode == "xi":
                report = xi_line_sweep(p, jobs=jobs)
            else:
                report = classify_hyperplane_fibers(
                    p, args.n if args.n is not None else 2, jobs=jobs,
                    override_cap=args.override_cap,
                )
        elif args.what == "sigma-search":
            report = search_sigma(
                p, args.n if args.n is not None else 3,
                mode=args.mode if args.mode else "exhaustive",
                samples=args.samples, seed=args.seed, jobs=jobs,
                override_cap=args.override_cap,
            )
        elif args.what == "collineation":
            n = args.n if args.n is not None else 3
            report = verify_collineation_lemma(p, n, n, jobs=jobs,
                                               override_cap=args.override_cap)
        elif args.what == "fundamental":
            report = fundamental_sweep(p, args.n if args.n is not None else 3, jobs=jobs,
                                       override_cap=args.override_cap)
        else:
            raise FileFormatError(f"unknown verification target {args.what!r}")
        ok, lines = report.ok, _sweep_lines(report)
        cert = report_certificate(report)
    for line in lines:
        print(line)
    print(f"{'VERIFIED' if ok else 'FAILED'} {args.what}")
    if args.cert:
        write_document(cert, args.cert)
        print(f"certificate written to {args.cert} (digest {cert['digest'][:16]}...)")
    return 0 if ok else 1


def _cmd_replay(args) -> int:
    cert = read_certificate(args.cert)
    if content_digest(cert) != cert["digest"]:
        print("FAILED replay: digest does not match the certificate content", file=sys.stderr)
        return 1
    if cert["kind"] == "sweep_report":
        ok, lines = _replay_sweep_certificate(cert, args.jobs)
    else:
        ok, lines = _replay_set_certificate(cert)
    for line in lines:
        print(line)
    print(f"{'VERIFIED' if ok else 'FAILED'} replay of {cert['kind']}")
    return 0 if ok else 1


# ------------------------------------------------------------------ parser


def _default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transverse",
        description="Exact computations with transverse and bilinear sets over F_p.",
    )
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help=f"worker count for sweeps (default: ${JOBS_ENV} or CPU count)")
    parser.add_argument("--override-cap", action="store_true",
                        help="lift the enumeration size guard")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named example set")
    c.add_argument("what", choices=["f3", "sigma-fig2", "p-sigma", "p-xi"])
    c.add_argument("--p", type=int, default=2)
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--seed", type=int)
    c.add_argument("--out", required=True)
    c.set_defaults(func=_cmd_construct)

    k = sub.add_parser("check", help="run a property check on a set file")
    k.add_argument("what", choices=["transverse", "bilinear", "ann", "closure"])
    k.add_argument("--set", required=True)
    k.add_argument("--cert")
    k.set_defaults(func=_cmd_check)

    f = sub.add_parser("phi", help="apply a word of vertical/horizontal operators")
    f.add_argument("--set", required=True)
    f.add_argument("--word", required=True)
    f.add_argument("--out", required=True)
    f.set_defaults(func=_cmd_phi)

    v = sub.add_parser("verify", help="run a named verification")
    v.add_argument("what", choices=["f3", "sigma-fig2", "exhaustive", "classification",
                                    "sigma-search", "collineation", "fundamental", "counting"])
    v.add_argument("--p", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--mode")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--cert")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("replay", help="re-verify a certificate from its own data")
    r.add_argument("--cert", required=True)
    r.set_defaults(func=_cmd_replay)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"file format error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"enumeration cap: {exc} (use --override-cap to proceed)", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
