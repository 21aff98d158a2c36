"""
Run-time overrides for the command line: flag first, then environment, then
the operation default.
"""

import os

ENV_VARS = {
    "tol": ("BEZKIT_TOL",),
    "depth": ("BEZKIT_DEPTH",),
    "samples": ("BEZKIT_SAMPLES",),
}


class ConfigError(ValueError):
    """A malformed environment override."""


def value_from_env(key, cast):
    for v in ENV_VARS[key]:
        if v in os.environ:
            try:
                return cast(os.environ[v])
            except ValueError:
                raise ConfigError(f"{v}={os.environ[v]!r} is not a valid {cast.__name__}") from None
    return None


def resolve(flag_value, key, default, cast=float):
    if flag_value is not None:
        return flag_value
    env_value = value_from_env(key, cast)
    return default if env_value is None else env_value


def resolve_args(args, defaults):
    """Fill args.tol, args.depth and args.samples in place."""
    args.tol = resolve(args.tol, "tol", defaults["tol"], float)
    args.depth = resolve(args.depth, "depth", defaults["depth"], int)
    args.samples = resolve(args.samples, "samples", defaults["samples"], int)
    return args
