"""Command-line entry point: ``sigma1 <subcommand> --p --f --e --d [--level] [--seed] [--out]``.

Output is JSON with sorted keys; integers are written as decimal strings.
Exit codes: 0 success, 1 a verification returned false, 2 invalid parameters.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .base_rings import Params
from .errors import Sigma1Error

EXIT_OK, EXIT_FALSE, EXIT_INVALID = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    p: int
    f: int = 1
    e: int = 1
    d: int = 1
    level: int = 1
    seed: int = 0
    out: str | None = None
    type_vector: tuple | None = None
    samples: int = 20

    @property
    def params(self) -> Params:
        return Params(self.p, self.f, self.e, self.d)


def jsonable(obj, N=None):
    """Convert results to plain JSON, integers as strings."""
    from .simplex_units import SymbolUnit

    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, SymbolUnit):
        return jsonable(obj.to_json(N))
    if isinstance(obj, dict):
        return {str(k): jsonable(v, N) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, N) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json(), N)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# -- subcommands: each returns (payload, ok) ---------------------------------------

def cmd_hyperplanes(cfg: RunConfig):
    from .hyperplanes import enumerate_hyperplanes, hyperplane_count
    P = cfg.params
    Hs = enumerate_hyperplanes(P, cfg.level)
    expected = hyperplane_count(P, cfg.level)
    return {"level": cfg.level, "count": len(Hs), "expected": expected,
            "classes": [H.to_json() for H in Hs]}, len(Hs) == expected


def cmd_simplex(cfg: RunConfig):
    from .building import maximal_simplex, standard_simplex
    P = cfg.params
    pres = standard_simplex(P, cfg.type_vector) if cfg.type_vector else maximal_simplex(P)
    return pres.to_json(), True


def cmd_xpid(cfg: RunConfig):
    from .building import maximal_simplex, xpid_presentation
    out = xpid_presentation(maximal_simplex(cfg.params))
    return out, out["composite"]["matches_pi_Vtilde"]


def cmd_kummer_class(cfg: RunConfig):
    from .divisors import kummer_class_sigma1
    cls = kummer_class_sigma1(cfg.params, cfg.level)
    return {"level": cls.level, "modulus": cls.modulus, "class": cls.to_json()}, True


def cmd_invariants(cfg: RunConfig):
    from .divisors import invariant_class_enumeration
    rep = invariant_class_enumeration(cfg.params, cfg.level)
    return rep.to_json(), rep.ok


def cmd_pi0(cfg: RunConfig):
    from .divisors import kummer_class_sigma1, pi0
    cls = kummer_class_sigma1(cfg.params, cfg.level)
    c, k = pi0(cls, "C"), pi0(cls, "Kbreve")
    return {"pi0_over_C": c, "pi0_over_Kbreve": k}, c == cfg.params.q - 1 and k == 1


def cmd_lemeqsigsig(cfg: RunConfig):
    from .building import maximal_simplex
    from .simplex_units import lemeqsigsig_report
    rep = lemeqsigsig_report(maximal_simplex(cfg.params))
    return rep.to_json(), rep.ok


def cmd_vertex_consistency(cfg: RunConfig):
    from .building import maximal_simplex
    from .simplex_units import vertex_consistency
    res = vertex_consistency(maximal_simplex(cfg.params))
    return res, res["ok"]


def cmd_norm_lemma(cfg: RunConfig):
    from .cover_algebra import check_norm_one_is_root_of_unity
    rep = check_norm_one_is_root_of_unity(cfg.params, samples=cfg.samples, seed=cfg.seed)
    return rep.to_json(), rep.ok


def cmd_idempotents(cfg: RunConfig):
    from .idempotents import canonical_form_report, idempotent_report, lagrange
    P = cfg.params
    rep = idempotent_report(P.q)
    forms = canonical_form_report(P)
    out = {"idempotents": rep.to_json(), "canonical_forms": forms.to_json(),
           "lagrange": [lagrange(P.q, k).to_json() for k in range(P.q - 1)]}
    return out, rep.ok and forms.ok


def cmd_acceptance(cfg: RunConfig):
    from .acceptance import run_acceptance
    results = run_acceptance(cfg.seed)
    for r in results:
        print(r.line(), file=sys.stderr)
    return {"criteria": [r.to_json() for r in results]}, all(r.ok for r in results)


COMMANDS = {
    "hyperplanes": cmd_hyperplanes,
    "simplex": cmd_simplex,
    "xpid": cmd_xpid,
    "kummer-class": cmd_kummer_class,
    "invariants": cmd_invariants,
    "pi0": cmd_pi0,
    "verify-lemeqsigsig": cmd_lemeqsigsig,
    "vertex-consistency": cmd_vertex_consistency,
    "norm-lemma": cmd_norm_lemma,
    "idempotents": cmd_idempotents,
    "acceptance": cmd_acceptance,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigma1", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--p", type=int, default=2)
        sp.add_argument("--f", type=int, default=1)
        sp.add_argument("--e", type=int, default=1)
        sp.add_argument("--d", type=int, default=1)
        sp.add_argument("--level", type=int, default=None,
                        help="n (default 1; 2 for invariants)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", default=None, help="write JSON here instead of stdout")
        if name == "simplex":
            sp.add_argument("--type", dest="type_vector", default=None,
                            help="comma separated type vector, default maximal")
        if name == "norm-lemma":
            sp.add_argument("--samples", type=int, default=20)
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    tv = getattr(ns, "type_vector", None)
    level = ns.level if ns.level is not None else (2 if ns.subcommand == "invariants" else 1)
    return RunConfig(ns.subcommand, ns.p, ns.f, ns.e, ns.d, level, ns.seed, ns.out,
                     tuple(int(x) for x in tv.split(",")) if tv else None,
                     getattr(ns, "samples", 20))


def run(cfg: RunConfig) -> tuple[int, dict]:
    try:
        P = cfg.params
        if cfg.level < 1:
            raise ValueError("--level must be at least 1")
        payload, ok = COMMANDS[cfg.subcommand](cfg)
    except (Sigma1Error, ValueError) as exc:
        return EXIT_INVALID, {"error": type(exc).__name__, "message": str(exc)}
    body = dict(payload)
    body.update({"subcommand": cfg.subcommand, "ok": bool(ok),
                 "params": {"p": P.p, "f": P.f, "e": P.e, "d": P.d,
                            "q": P.q, "N": P.N, "Ntilde": P.Ntilde}})
    return (EXIT_OK if ok else EXIT_FALSE), jsonable(body, P.N)


def main(argv=None) -> int:
    cfg = parse_config(argv)
    code, body = run(cfg)
    text = json.dumps(body, sort_keys=True, ensure_ascii=False, indent=2)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
