""" bezkit command line: one subcommand per library operation """

import argparse
import json
import logging
import random
import sys

from pydantic import ValidationError

from bezKit.src.bezout import (
    IDENTITY_NAMES,
    bezout_matrix,
    common_zero_count,
    identity_suite,
    random_sample_points,
)
from bezKit.src.braid import DEFAULT_DEPTH, DEFAULT_TOL as BRAID_TOL, PlaneRationalMap, monodromy_descriptor
from bezKit.src.errors import ArithmeticInvariantError, InvariantViolationError, PreconditionError
from bezKit.src.implicit import (
    RationalTriple,
    implicitize,
    quadrature_boundary,
    sample_boundary,
    sample_curve,
)
from bezKit.src.polynomial import degree_or_zero
from bezKit.src.roots import DEFAULT_TOL as ROOT_TOL
from bezKit.src.scalars import QQ
from bezKit.src.structured import bezout_inverse, hermite_upper_halfplane
from bezKit.src.vessel import (
    DEFAULT_TOL as VESSEL_TOL,
    CommutativeVessel,
    OperatorNode,
    node_residual,
    stacked_phi_prime,
    vessel_from_node,
    vessel_residuals,
)

from .config import ConfigError, resolve_args
from .io import (
    BezoutResponse,
    BivariatePayload,
    BraidRequest,
    BraidResponse,
    CommonZerosResponse,
    HankelResponse,
    HermiteResponse,
    IdentitiesRequest,
    NodePayload,
    NodeResidualResponse,
    PairRequest,
    QuadratureRequest,
    SingleRequest,
    TripleRequest,
    VesselBuildRequest,
    VesselPayload,
    VesselResidualsResponse,
    dump_scalar,
    field_label,
    lift_common,
    matrix_rows,
    promote,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 512
DEFAULT_IDENTITY_POINTS = 32


def dump_json(model):
    return json.dumps(model.model_dump(), sort_keys=True, indent=2) + "\n"


def write_csv(path, header, columns):
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(format(float(v), ".17g") for v in row))
    text = "\n".join(lines) + "\n"
    if path is None:
        return text
    with open(path, "w") as f:
        f.write(text)
    return None


def _pair(args, data):
    req = PairRequest.model_validate(data)
    p, q = lift_common(promote(req.p.to_polynomial(), args.field), promote(req.q.to_polynomial(), args.field))
    return p, q, req.n


def _triple(args, req):
    polys = lift_common(*(promote(getattr(req, k).to_polynomial(), args.field) for k in ("p0", "p1", "p2")))
    return RationalTriple.of(*polys, n=req.n)


# handlers: each parses its payload, calls one operation and returns the output text


def cmd_bezout(args, data):
    p, q, n = _pair(args, data)
    B = bezout_matrix(p, q, n)
    return dump_json(BezoutResponse(
        field=field_label(B.field), size=B.size, matrix=matrix_rows(B.matrix)
    ))


def cmd_common_zeros(args, data):
    p, q, _ = _pair(args, data)
    return dump_json(CommonZerosResponse(common_zeros=common_zero_count(p, q)))


def cmd_invert(args, data):
    p, q, _ = _pair(args, data)
    H = bezout_inverse(p, q)
    return dump_json(HankelResponse(
        field=field_label(H.field),
        n=H.n,
        generator=[dump_scalar(g, H.field) for g in H.generator],
    ))


def cmd_hermite(args, data):
    req = SingleRequest.model_validate(data)
    result = hermite_upper_halfplane(req.p.to_polynomial())
    return dump_json(HermiteResponse(
        verdict=result.verdict.value, minors=[dump_scalar(m, QQ) for m in result.minors]
    ))


def cmd_implicitize(args, data):
    triple = _triple(args, TripleRequest.model_validate(data))
    delta = implicitize(triple, workers=args.workers)
    return dump_json(BivariatePayload.from_bivariate(delta))


def cmd_quadrature(args, data):
    req = QuadratureRequest.model_validate(data)
    q = req.q.to_polynomial()
    delta = quadrature_boundary(q, workers=args.workers)
    if args.csv:
        write_csv(args.csv, ("theta", "re", "im"), sample_boundary(q, args.samples))
        logger.info("[quadrature] wrote %d boundary samples to %s", args.samples, args.csv)
    return dump_json(BivariatePayload.from_bivariate(delta))


def cmd_sample(args, data):
    triple = _triple(args, TripleRequest.model_validate(data))
    return write_csv(None, ("t", "x1", "x2"), sample_curve(triple, args.interval, args.samples))


def cmd_identities(args, data):
    req = IdentitiesRequest.model_validate(data)
    p, q = lift_common(promote(req.p.to_polynomial(), args.field), promote(req.q.to_polynomial(), args.field))
    field = p.field
    if req.points is not None:
        points = req.sample_points(field)
    else:
        points = random_sample_points(random.Random(args.seed), args.samples, field)
    w = req.weights(field)
    report = identity_suite(p, q, points, w=w, n=req.n, progress=args.verbose > 0)
    summary = report.summary()
    lines = [f"{'identity':<15}{'passed':>8}{'total':>8}  status"]
    for name in IDENTITY_NAMES:
        ok, total = summary.get(name, (0, 0))
        lines.append(f"{name:<15}{ok:>8}{total:>8}  {'PASS' if ok == total else 'FAIL'}")
    text = "\n".join(lines) + "\n"
    if not report.passed:
        sys.stdout.write(text)
        raise ArithmeticInvariantError("bilinear identity suite failed")
    return text


def cmd_vessel_check(args, data):
    if isinstance(data, dict) and "A1" in data:
        req = VesselPayload.model_validate(data)
        v = CommutativeVessel(**{k: getattr(req, k).to_array() for k in VesselPayload.model_fields})
        res = vessel_residuals(v)
        return dump_json(VesselResidualsResponse(**res.as_dict(), is_vessel=res.is_vessel(args.tol)))
    req = NodePayload.model_validate(data)
    node = OperatorNode(req.A.to_array(), req.Phi.to_array(), req.sigma.to_array())
    r = node_residual(node)
    return dump_json(NodeResidualResponse(node_residual=r, is_node=r <= args.tol))


def cmd_vessel_build(args, data):
    req = VesselBuildRequest.model_validate(data)
    node = OperatorNode(req.node.A.to_array(), req.node.Phi.to_array(), req.node.sigma.to_array())
    p0, p1, p2 = (getattr(req, k).to_polynomial() for k in ("p0", "p1", "p2"))
    n = req.n if req.n is not None else max(1, *(degree_or_zero(p) for p in (p0, p1, p2)))
    if req.phi_prime is not None:
        phi_prime = req.phi_prime.to_array()
    else:
        logger.info("[vessel-build] no phi_prime supplied, using the stacked construction")
        phi_prime = stacked_phi_prime(node, p0, n)
    v = vessel_from_node(node, p0, p1, p2, phi_prime, n)
    return dump_json(VesselPayload.from_vessel(v))


def cmd_braid(args, data):
    req = BraidRequest.model_validate(data)
    m = PlaneRationalMap(*(getattr(req, k).to_bivariate() for k in ("p0", "p1", "p2")))
    descriptor = monodromy_descriptor(m, depth_cap=args.depth, tol=args.tol, workers=args.workers)
    return dump_json(BraidResponse.model_validate(descriptor.as_dict()))


COMMANDS = {
    "bezout": (cmd_bezout, "Bezout matrix of a polynomial pair"),
    "common-zeros": (cmd_common_zeros, "number of common zeros via the Bezout kernel"),
    "invert": (cmd_invert, "exact Hankel inverse of a Bezout matrix"),
    "hermite": (cmd_hermite, "upper half-plane root location test"),
    "implicitize": (cmd_implicitize, "implicit equation of a rational plane curve"),
    "quadrature": (cmd_quadrature, "boundary of the image of the unit disk"),
    "vessel-check": (cmd_vessel_check, "residuals of a node or vessel bundle"),
    "vessel-build": (cmd_vessel_build, "vessel generated by a node and a triple"),
    "braid": (cmd_braid, "intersection multiplicities of two image conics"),
    "sample": (cmd_sample, "CSV samples of a rational curve"),
    "identities": (cmd_identities, "bilinear identity suite of a Bezout matrix"),
}

COMMAND_TOL = {"vessel-check": VESSEL_TOL, "vessel-build": VESSEL_TOL, "braid": BRAID_TOL}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", type=str, default=None, help="input JSON file")
    common.add_argument("--json", dest="inline", type=str, default=None, help="inline input JSON")
    common.add_argument("--out", type=str, default=None)
    common.add_argument("--field", type=str, default=None, choices=["Q", "Qi"])
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--interval", type=float, nargs=2, default=[-1.0, 1.0], metavar=("A", "B"))
    common.add_argument(
        "--csv", type=str, default=None,
        help="quadrature: also write --samples boundary points (theta,re,im) to this CSV; skipped when absent",
    )
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="bezkit", description="Bezout matrix toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (handler, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
    return parser


def setup_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True
    )


def _read_input(args):
    if args.inline is not None:
        return args.inline
    if args.input is not None:
        with open(args.input) as f:
            return f.read()
    return sys.stdin.read()


def _fail(code, message):
    sys.stderr.write(f"error: {message}\n")
    return code


def run(argv=None):
    """Execute one subcommand; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    setup_logging(args.verbose)

    defaults = {
        "tol": COMMAND_TOL.get(args.command, ROOT_TOL),
        "depth": DEFAULT_DEPTH,
        "samples": DEFAULT_IDENTITY_POINTS if args.command == "identities" else DEFAULT_SAMPLES,
    }
    try:
        resolve_args(args, defaults)
        data = json.loads(_read_input(args))
        output = args.handler(args, data)
    except ConfigError as exc:
        return _fail(2, str(exc))
    except OSError as exc:
        return _fail(2, f"cannot read input: {exc}")
    except json.JSONDecodeError as exc:
        return _fail(2, f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    except ValidationError as exc:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in exc.errors()
        )
        return _fail(2, f"invalid input: {details}")
    except PreconditionError as exc:
        return _fail(3, f"{type(exc).__name__}: {exc}")
    except InvariantViolationError as exc:
        return _fail(4, f"{type(exc).__name__}: {exc}")

    if output is not None:
        if args.out:
            with open(args.out, "w") as f:
                f.write(output)
        else:
            sys.stdout.write(output)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
