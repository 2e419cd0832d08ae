"""Run configuration: dimension cap, sweep bounds, and the test seed.

Config files are plain key=value lines; # starts a comment.  Unknown
keys are rejected so typos fail loudly.
"""

from __future__ import annotations

DEFAULTS = {
    "dimension_cap": 200_000,
    "bound_classical": 6,
    "bound_exceptional": 2,
    "seed": 20240822,
}


def parse_config(text):
    """Parse key=value lines into a dict over the known keys."""
    out = dict(DEFAULTS)
    for lineno, raw in enumerate(str(text).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULTS:
            raise ValueError("bad config line %d: %r" % (lineno, raw))
        try:
            out[key] = int(value.strip())
        except ValueError:
            raise ValueError("config key %s needs an integer, got %r"
                             % (key, value.strip())) from None
    return out


def load_config(path=None):
    """Defaults, overlaid with the file at path when given."""
    if path is None:
        return dict(DEFAULTS)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
