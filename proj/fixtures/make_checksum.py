#!/usr/bin/env python3
"""Recompute and stamp the checksum field of a fixture template.

Usage: make_checksum.py FILE [FILE...]

The payload format must stay in sync with checksum_payload() in
core/src/families.cpp:

    name|p0,p1|v<c0>,<c1>,<c2>;...|e<i>,<j>;...
        |c<from>,<to>:<l0>,<l1>,<l2>:<w0>,<w1>,<w2>;...

where a pendant chain has to = -1 and the weight defaults to [0, 0, -2].
"""

import json
import re
import sys


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def payload(t: dict) -> str:
    parts = [t["name"], ",".join(t["params"])]
    parts.append("".join("v%d,%d,%d;" % tuple(v) for v in t["vertices"]))
    parts.append("".join("e%d,%d;" % tuple(e) for e in t["edges"]))
    chains = ""
    for c in t.get("chains", []):
        to = -1 if c["to"] is None else c["to"]
        weight = c.get("weight", [0, 0, -2])
        chains += "c%d,%d:%d,%d,%d:%d,%d,%d;" % (
            c["from"], to, *c["length"], *weight)
    parts.append(chains)
    return "|".join(parts)


def main() -> None:
    for path in sys.argv[1:]:
        with open(path) as f:
            t = json.load(f)
        t["checksum"] = "fnv1a64:%x" % fnv1a64(payload(t).encode())
        text = json.dumps(t, indent=2)
        # keep short number arrays on one line
        text = re.sub(
            r"\[\s+((?:-?\d+,\s+)*-?\d+)\s+\]",
            lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]",
            text,
        )
        with open(path, "w") as f:
            f.write(text + "\n")
        print(f"{path}: {t['checksum']}")


if __name__ == "__main__":
    main()
