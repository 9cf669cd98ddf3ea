"""Check dictionaries and report assembly shared by verifiers and the CLI.

A check is {"name", "status" (PASS/FAIL/SKIP), "details", "witnesses"};
a report bundles checks with the invoking command, its parameters, and a
wall-clock figure.  Everything is plain JSON-serializable data so the CLI
can render text or JSON without translation.
"""

from __future__ import annotations

import json

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


def check(name, ok, details="", witnesses=None):
    witnesses = list(witnesses or [])
    if not ok and not witnesses:
        witnesses = [{"note": "identity failed with no recorded example"}]
    return {
        "name": name,
        "status": PASS if ok else FAIL,
        "details": str(details),
        "witnesses": witnesses,
    }


def skip(name, reason):
    return {"name": name, "status": SKIP, "details": reason, "witnesses": []}


def map_check(name, lhs, rhs, source_labels, details=""):
    """A check comparing two matrix-backed maps, with a witness column on
    failure: the first basis input where they disagree and the difference."""
    if lhs == rhs:
        return check(name, True, details=details)
    diff = lhs.mat - rhs.mat
    j = min(c for (_, c) in diff.data)
    entries = sorted((r, s) for (r, c), s in diff.data.items() if c == j)
    witness = {
        "input": source_labels[j],
        "difference": [[r, repr(s)] for r, s in entries],
    }
    return check(name, False, details=details or "maps differ",
                 witnesses=[witness])


def has_fail(checks):
    return any(c["status"] == FAIL for c in checks)


def has_skip(checks):
    return any(c["status"] == SKIP for c in checks)


def all_pass(checks):
    return not has_fail(checks)


def make_report(command, params, checks, elapsed_ms):
    return {
        "command": command,
        "params": dict(params),
        "checks": list(checks),
        "elapsed_ms": int(elapsed_ms),
    }


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2, default=str)


def render_text(report):
    lines = ["command: %s" % report["command"]]
    if report["params"]:
        lines.append("params: " + " ".join(
            "%s=%s" % (k, report["params"][k]) for k in sorted(report["params"])))
    counts = {PASS: 0, FAIL: 0, SKIP: 0}
    for c in report["checks"]:
        counts[c["status"]] += 1
        line = "%-4s %s" % (c["status"], c["name"])
        if c["details"]:
            line += " — " + c["details"]
        lines.append(line)
        for w in c["witnesses"]:
            lines.append("     witness: %s"
                         % json.dumps(w, sort_keys=True, default=str))
    lines.append("%d checks: %d PASS, %d FAIL, %d SKIP (%d ms)" % (
        len(report["checks"]), counts[PASS], counts[FAIL], counts[SKIP],
        report["elapsed_ms"]))
    return "\n".join(lines)
