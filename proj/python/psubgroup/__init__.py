"""p-subgroup posets, their order complexes and integral homology.

    >>> import psubgroup
    >>> psubgroup.euler("Alt(6)", 3)
    9
    >>> psubgroup.verify("field-case", "PSigmaL(2,4)", 2)["data"]["top_rank"]
    16
"""

from ._core import PqError, __version__, canonical_dump, euler, list_catalog, order, run, verifier_ids

__all__ = [
    "PqError",
    "__version__",
    "canonical_dump",
    "euler",
    "group",
    "homology",
    "list_catalog",
    "order",
    "run",
    "suite",
    "verifier_ids",
    "verify",
]


def _result(code, report):
    if report["verdict"] == "error":
        raise PqError(report["result"]["message"])
    return report["result"]


def group(spec, p=0, **kw):
    return _result(*run("group", group=spec, p=p, **kw))


def homology(spec, p, kind="A", **kw):
    return _result(*run("homology", group=spec, p=p, kind=kind, **kw))


def verify(verifier, spec, p, r=None, **kw):
    return _result(*run("verify", group=spec, p=p, verifier=verifier, r=r, **kw))


def suite(slow=False, **kw):
    return _result(*run("suite", slow=slow, **kw))
