#!/usr/bin/env python3
"""Convert a flat gate-level Verilog netlist (ISCAS-style primitives) to ASCII AIGER.

Supported statements: module header, input/output/wire declarations, simple
`assign a = b;` aliases (optionally `~b`, 1'b0, 1'b1), positional primitive
gates (and, nand, or, nor, xor, xnor, not, buf) and `ff` instances with named
.D/.Q pins (clock ignored, init 0).

Usage: netlist_to_aag.py input.v output.aag
"""

import re
import sys

GATES = {"and", "nand", "or", "nor", "xor", "xnor", "not", "buf"}


class Aig:
    def __init__(self):
        self.num_vars = 0
        self.inputs = []   # variable indices
        self.latches = []  # [var, next_lit]
        self.ands = []     # (lhs, rhs0, rhs1)
        self.strash = {}

    def new_var(self):
        self.num_vars += 1
        return self.num_vars

    def AND(self, a, b):
        if a > b:
            a, b = b, a
        if a == 0:
            return 0
        if a == 1:
            return b
        if a == b:
            return a
        if a ^ 1 == b:
            return 0
        key = (a, b)
        if key not in self.strash:
            lhs = 2 * self.new_var()
            self.ands.append((lhs, b, a))
            self.strash[key] = lhs
        return self.strash[key]

    def OR(self, a, b):
        return self.AND(a ^ 1, b ^ 1) ^ 1

    def XOR(self, a, b):
        return self.OR(self.AND(a, b ^ 1), self.AND(a ^ 1, b))


def statements(text):
    text = re.sub(r"//[^\n]*", "", text)
    text = re.sub(r"/\*.*?\*/", "", text, flags=re.S)
    for stmt in text.split(";"):
        stmt = " ".join(stmt.split())
        if stmt:
            yield stmt


def convert(text):
    aig = Aig()
    inputs, outputs = [], []
    drivers = {}   # net -> ('gate', kind, [fanins]) | ('alias', src, neg) | ('ff', d)
    for stmt in statements(text):
        if stmt.startswith("endmodule"):
            stmt = stmt[len("endmodule"):].strip()
            if not stmt:
                continue
        head, _, rest = stmt.partition(" ")
        if head == "module":
            continue
        if head in ("input", "output"):
            names = [n.strip() for n in rest.split(",") if n.strip()]
            (inputs if head == "input" else outputs).extend(names)
            continue
        if head == "wire":
            continue
        if head == "assign":
            lhs, _, rhs = rest.partition("=")
            lhs, rhs = lhs.strip(), rhs.strip()
            neg = rhs.startswith("~")
            drivers[lhs] = ("alias", rhs.lstrip("~").strip(), neg)
            continue
        if head in GATES:
            m = re.match(r"(\S+)?\s*\((.*)\)$", rest)
            pins = [p.strip() for p in m.group(2).split(",")]
            drivers[pins[0]] = ("gate", head, pins[1:])
            continue
        if head == "ff":
            pins = dict(re.findall(r"\.(\w+)\s*\(\s*([^)\s]+)\s*\)", rest))
            drivers[pins["Q"]] = ("ff", pins["D"])
            continue
        raise SystemExit(f"unsupported statement: {stmt[:60]}")

    clocks = {n for n in inputs if n.lower() in ("clk", "clock", "ck")}
    lit = {"1'b0": 0, "1'b1": 1}
    for name in inputs:
        if name in clocks:
            continue
        v = aig.new_var()
        aig.inputs.append((v, name))
        lit[name] = 2 * v
    ffs = [(net, d[1]) for net, d in drivers.items() if d[0] == "ff"]
    for net, _ in ffs:
        v = aig.new_var()
        lit[net] = 2 * v
        aig.latches.append([v, None, net])

    sys.setrecursionlimit(100000)

    def resolve(net):
        if net in lit:
            return lit[net]
        if net not in drivers:
            raise SystemExit(f"undriven net {net}")
        d = drivers[net]
        if d[0] == "alias":
            value = resolve(d[1]) ^ (1 if d[2] else 0)
        else:
            kind, fanins = d[1], [resolve(f) for f in d[2]]
            if kind in ("not", "buf"):
                value = fanins[0] ^ (1 if kind == "not" else 0)
            elif kind in ("and", "nand"):
                value = 1
                for f in fanins:
                    value = aig.AND(value, f)
                value ^= 1 if kind == "nand" else 0
            elif kind in ("or", "nor"):
                value = 0
                for f in fanins:
                    value = aig.OR(value, f)
                value ^= 1 if kind == "nor" else 0
            else:
                value = 0
                for f in fanins:
                    value = aig.XOR(value, f)
                value ^= 1 if kind == "xnor" else 0
        lit[net] = value
        return value

    for latch, (net, d) in zip(aig.latches, ffs):
        latch[1] = resolve(d)
    out_lits = [(resolve(o), o) for o in outputs]

    lines = [f"aag {aig.num_vars} {len(aig.inputs)} {len(aig.latches)} {len(out_lits)} {len(aig.ands)}"]
    lines += [str(2 * v) for v, _ in aig.inputs]
    lines += [f"{2 * v} {nxt}" for v, nxt, _ in aig.latches]
    lines += [str(l) for l, _ in out_lits]
    lines += [f"{a} {b} {c}" for a, b, c in aig.ands]
    lines += [f"i{i} {name}" for i, (_, name) in enumerate(aig.inputs)]
    lines += [f"l{i} {name}" for i, (_, _, name) in enumerate(aig.latches)]
    lines += [f"o{i} {name}" for i, (_, name) in enumerate(out_lits)]
    return "\n".join(lines) + "\n"


def main():
    if len(sys.argv) != 3:
        raise SystemExit(__doc__)
    with open(sys.argv[1]) as f:
        text = f.read()
    with open(sys.argv[2], "w") as f:
        f.write(convert(text))


if __name__ == "__main__":
    main()
