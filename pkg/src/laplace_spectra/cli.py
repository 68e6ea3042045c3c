"""Command-line front end.

Every subcommand writes one JSON report (to --out or stdout).  Reports embed
the run configuration, the normalization conventions and the package
version, and are serialized with sorted keys so identical configurations
give identical bytes.  Exit codes: 0 success, 2 invariant violation,
3 capacity exceeded or undecided certificate, 64 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction

from . import __version__
from .errors import CapacityError, InputError, InvariantViolation, SpectraError
from .exactmath import RESULTANT_CONVENTION, format_rational, to_fraction
from .latticescan import scan
from .q8 import RepSpectrum, Spectrum, assemble, build_q8, simplicity_dictionary, spectra_from_report
from .reptype import TYPES, a1_type_oracle, type_of
from .rootsystem import (
    NORMALIZATION,
    lattice_from_spec,
    load_root_system_fixture,
    longest_element,
    max_closure,
    system_from_spec,
    weyl_group,
)
from .selfcheck import run_all
from .spectrum import check_record_invariants, collisions, enumerate_with_bound, records_csv
from .spheresym import sphere_family, sphere_points, sphere_report, symmetry_group, verify_weyl_containment
from .su2lab import KappaMatrix, certify_generic_simple, d_operator

EXIT_OK, EXIT_INVARIANT, EXIT_CAPACITY, EXIT_USAGE = 0, 2, 3, 64
SU2_BASIS = "u_k = i*sigma_k, g0(X, Y) = -tr(XY)/2, D(kappa) = -sum kappa_ij rho(u_i) rho(u_j)"
SUBCOMMANDS = ("roots", "spectrum", "collisions", "sphere-sym", "types", "assemble",
               "verdict", "certify", "selfcheck", "operator")
# paths that name outputs only; they are left out of the embedded config
_OUTPUT_FIELDS = ("out", "csv")


@dataclass
class RunConfig:
    subcommand: str
    system: str | None = None
    mult: str | None = None
    delta_mode: str | None = None
    system_file: str | None = None
    lattice: str | None = None
    cutoff: str | None = None
    a2: str | None = None
    a2_max: str | None = None
    weight: str | None = None
    input: str | None = None
    rep_type: str | None = None
    m: int | None = None
    kappa: str | None = None
    mmax: int | None = None
    schedule: str | None = None
    subgroup: str | None = None
    out: str | None = None
    csv: str | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k not in _OUTPUT_FIELDS}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_system(p):
    p.add_argument("--system", help="root system, e.g. A2, B3, G2, BC2")
    p.add_argument("--mult", help="root multiplicities, e.g. short=2,long=1")
    p.add_argument("--delta-mode", choices=("weighted", "plain"))
    p.add_argument("--system-file", help="JSON root-system fixture")


def _add_lattice(p):
    p.add_argument("--lattice", help="weight (default), root, even, or fw:a,b;c,d")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="laplace-spectra", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser, required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON file mirroring the flags")
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        return p

    p = command("roots", "root-system data, Weyl group order, -w0")
    _add_system(p)
    for name in ("spectrum", "collisions"):
        p = command(name, "spherical weights and Casimir eigenvalues up to a cutoff"
                    if name == "spectrum" else "eigenvalue collision classes of size >= 2")
        _add_system(p)
        _add_lattice(p)
        p.add_argument("--cutoff", help="bound on a^2 = (mu+delta, mu+delta), as p/q")
        if name == "spectrum":
            p.add_argument("--csv", help="also write a flat CSV table")
    p = command("sphere-sym", "lattice sphere S(a) about -delta and its symmetry group")
    _add_system(p)
    _add_lattice(p)
    p.add_argument("--a2", help="squared radius, as p/q")
    p.add_argument("--a2-max", help="report every nonempty sphere with a^2 up to this bound")
    p = command("types", "real/complex/quaternionic type of highest weights")
    _add_system(p)
    _add_lattice(p)
    p.add_argument("--cutoff", help="classify every spherical weight up to this a^2")
    p.add_argument("--weight", help="Dynkin labels, e.g. '1,0' or '1,0;0,1'")
    p = command("assemble", "eigenspace structure from a type and multiplicity, or a report")
    p.add_argument("--type", dest="rep_type", choices=TYPES)
    p.add_argument("--m", type=int, help="eigenvalue multiplicity")
    p.add_argument("--input", help="spectrum or certify JSON report")
    p = command("verdict", "real G-simple versus complex (Q8 x G)-simple verdict for a report")
    p.add_argument("--input", help="spectrum or certify JSON report")
    p = command("certify", "generic G-simplicity certificate on the su(2) laboratory")
    p.add_argument("--mmax", type=int)
    p.add_argument("--schedule", help="'default' or a JSON file of 3x3 matrices")
    p.add_argument("--subgroup", choices=("trivial", "torus"))
    p = command("selfcheck", "run the desk-scale invariant suite")
    p = command("operator", "exact D(kappa) on the su(2) irreducible of highest weight m")
    p.add_argument("--m", type=int)
    p.add_argument("--kappa", help="rows separated by ';', e.g. '1,0,0;0,1,0;0,0,1'")
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    values = vars(args)
    config_path = values.pop("config", None)
    if config_path:
        try:
            with open(config_path, encoding="utf-8") as fh:
                mirror = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read config {config_path}: {exc}")
        if not isinstance(mirror, dict):
            parser.error("config file must hold a JSON object")
        known = {f.name for f in fields(RunConfig)}
        for key, value in mirror.items():
            key = key.replace("-", "_")
            if key == "type":
                key = "rep_type"
            if key not in known or key == "subcommand":
                parser.error(f"unknown config key {key!r}")
            if values.get(key) is None:
                values[key] = value
    return RunConfig(**{k: v for k, v in values.items() if k in {f.name for f in fields(RunConfig)}})


# ---------------------------------------------------------------------------

def _root_system(cfg: RunConfig):
    if cfg.system_file:
        return load_root_system_fixture(cfg.system_file)
    if not cfg.system:
        raise InputError("--system or --system-file is required")
    return system_from_spec(cfg.system, cfg.mult, cfg.delta_mode or "weighted")


def _rational(text, flag) -> Fraction:
    if text is None:
        raise InputError(f"--{flag} is required")
    return to_fraction(str(text))


def _dynkin_list(text):
    try:
        return [[to_fraction(x) for x in row.split(",")] for row in str(text).split(";")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse weights {text!r}") from exc


def _conventions(rs=None) -> dict:
    out = {"root_length": NORMALIZATION, "resultant": RESULTANT_CONVENTION}
    if rs is not None:
        out["delta_mode"] = rs.delta_mode
    return out


def _vec(v):
    return [format_rational(x) for x in v]


def cmd_roots(cfg):
    rs = _root_system(cfg)
    report = {"root_system": rs.to_json(), "weyl_closure_bound": max_closure()}
    if not rs.is_restricted:
        w = weyl_group(rs)
        w0 = longest_element(rs)
        report.update({"weyl_group_order": len(w), "longest_element_word": list(w0.word),
                       "minus_w0_on_fundamental": [
                           _vec(rs.dynkin_labels(-w0.matrix @ f)) for f in rs.fundamental_weights]})
    else:
        report["weyl_group_order"] = len(weyl_group(rs))
    return report, rs, EXIT_OK


def _spectrum_data(cfg):
    rs = _root_system(cfg)
    lattice = lattice_from_spec(rs, cfg.lattice)
    cutoff = _rational(cfg.cutoff, "cutoff")
    records, result = enumerate_with_bound(rs, lattice, cutoff)
    check_record_invariants(rs, records)
    return rs, lattice, cutoff, records, result


def cmd_spectrum(cfg):
    rs, lattice, cutoff, records, result = _spectrum_data(cfg)
    classes = collisions(records)
    report = {
        "system": rs.name,
        "lattice": lattice.to_json(),
        "cutoff": format_rational(cutoff),
        "delta_norm2": format_rational(rs.delta_norm2()),
        "records": [r.to_json() for r in records],
        "collision_classes": [c.to_json() for c in classes],
        "enumeration_bound": result.bound_record(),
    }
    if cfg.csv:
        with open(cfg.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(records_csv(records))
    return report, rs, EXIT_OK


def cmd_collisions(cfg):
    rs, lattice, cutoff, records, result = _spectrum_data(cfg)
    classes = [c for c in collisions(records) if c.size >= 2]
    report = {
        "system": rs.name,
        "lattice": lattice.to_json(),
        "cutoff": format_rational(cutoff),
        "records_scanned": len(records),
        "collision_classes": [c.to_json() for c in classes],
        "nondual_collisions": sum(1 for c in classes if c.nondual_pair_exists),
        "enumeration_bound": result.bound_record(),
    }
    return report, rs, EXIT_OK


def _sphere_entry(rs, ss):
    containment = verify_weyl_containment(rs, ss)
    group = symmetry_group(ss) if ss.spans_ambient else None
    return sphere_report(ss, group, containment)


def cmd_sphere_sym(cfg):
    rs = _root_system(cfg)
    lattice = lattice_from_spec(rs, cfg.lattice)
    if cfg.a2_max is not None:
        family = sphere_family(rs, lattice, _rational(cfg.a2_max, "a2-max"))
        spheres = [_sphere_entry(rs, ss) for ss in family]
        report = {"system": rs.name, "lattice": lattice.to_json(),
                  "a2_max": format_rational(to_fraction(str(cfg.a2_max))), "spheres": spheres,
                  "all_weyl_contained": all(s["weyl_containment"] for s in spheres),
                  "all_transitive": all(s["transitive"] for s in spheres if s["spans"])}
        return report, rs, EXIT_OK
    ss = sphere_points(rs, lattice, _rational(cfg.a2, "a2"))
    report = {"system": rs.name, "lattice": lattice.to_json(), **_sphere_entry(rs, ss)}
    return report, rs, EXIT_OK


def cmd_types(cfg):
    rs = _root_system(cfg)
    if cfg.weight is not None:
        weights = [rs.from_dynkin(row) for row in _dynkin_list(cfg.weight)]
    elif cfg.cutoff is not None:
        records, _ = enumerate_with_bound(rs, lattice_from_spec(rs, cfg.lattice),
                                          _rational(cfg.cutoff, "cutoff"))
        weights = [r.mu for r in records]
    else:
        raise InputError("types needs --weight or --cutoff")
    rows = []
    for mu in weights:
        t = type_of(rs, mu)
        row = {"mu": _vec(rs.dynkin_labels(mu)), **t.to_json()}
        if rs.name == "A1":
            m = int(rs.dynkin_labels(mu)[0])
            if m <= 64:
                row["oracle_type"] = a1_type_oracle(m).value
        rows.append(row)
    return {"system": rs.name, "types": rows}, rs, EXIT_OK


def _load_report(path) -> dict:
    if not path:
        raise InputError("--input is required")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read report {path}: {exc}") from exc


def cmd_assemble(cfg):
    if cfg.input is None:
        if cfg.rep_type is None or cfg.m is None:
            raise InputError("assemble needs --type and --m, or --input")
        return {"assembly": assemble(cfg.rep_type, cfg.m).to_json()}, None, EXIT_OK
    reps = spectra_from_report(_load_report(cfg.input))
    rows = []
    for e in reps:
        rows.append({"label": e.label, "type": e.rep_type,
                     "eigenspaces": [{"eigenvalues_root_of": str(f), "count": f.degree,
                                      **assemble(e.rep_type, k).to_json()}
                                     for f, k in e.spectrum.factors]})
    return {"per_rep": rows}, None, EXIT_OK


def cmd_verdict(cfg):
    verdict = simplicity_dictionary(spectra_from_report(_load_report(cfg.input)))
    return {"verdict": verdict, "real_G_simple": verdict["real_G_simple"],
            "complex_Q8xG_simple": verdict["complex_Q8xG_simple"],
            "per_rep": verdict["per_rep"]}, None, EXIT_OK


def cmd_certify(cfg):
    if cfg.mmax is None:
        raise InputError("--mmax is required")
    cert = certify_generic_simple(cfg.mmax, cfg.schedule or "default", cfg.subgroup or "trivial")
    report = cert.to_json()
    return report, None, EXIT_OK if cert.verdict else EXIT_CAPACITY


def cmd_selfcheck(cfg):
    results = run_all()
    ok = all(r["ok"] for r in results)
    return {"checks": results, "ok": ok}, None, EXIT_OK if ok else EXIT_INVARIANT


def cmd_operator(cfg):
    if cfg.m is None:
        raise InputError("--m is required")
    kappa = KappaMatrix.parse(cfg.kappa or "1,0,0;0,1,0;0,0,1")
    return {"operator": d_operator(kappa, cfg.m).to_json()}, None, EXIT_OK


HANDLERS = {
    "roots": cmd_roots, "spectrum": cmd_spectrum, "collisions": cmd_collisions,
    "sphere-sym": cmd_sphere_sym, "types": cmd_types, "assemble": cmd_assemble,
    "verdict": cmd_verdict, "certify": cmd_certify, "selfcheck": cmd_selfcheck,
    "operator": cmd_operator,
}


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(cfg: RunConfig) -> int:
    body, rs, code = HANDLERS[cfg.subcommand](cfg)
    conventions = _conventions(rs)
    if cfg.subcommand in ("certify", "operator", "selfcheck"):
        conventions["su2_basis"] = SU2_BASIS
    report = {**body, "config": cfg.to_json(), "conventions": conventions,
              "version": __version__}
    text = render(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        return run(cfg)
    except SpectraError as exc:
        print(f"laplace-spectra: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError) as exc:
        print(f"laplace-spectra: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
