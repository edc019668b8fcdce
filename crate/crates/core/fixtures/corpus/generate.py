#!/usr/bin/env python3
"""Regenerates the Java-like corpus fixtures. Output is deterministic.

    python3 fixtures/corpus/generate.py
"""
import json
import random
import shutil
from pathlib import Path

HERE = Path(__file__).resolve().parent

NOUNS = ["order", "invoice", "shipment", "customer", "batch", "segment", "partition",
         "session", "ticket", "payment", "record", "job", "channel", "snapshot", "lease"]
VERBS = ["process", "validate", "persist", "dispatch", "reconcile", "load", "flush",
         "publish", "retry", "expire", "merge", "schedule", "archive", "refresh"]
PAST = {"process": "processed", "validate": "validated", "persist": "persisted",
        "dispatch": "dispatched", "reconcile": "reconciled", "load": "loaded",
        "flush": "flushed", "publish": "published", "retry": "retried",
        "expire": "expired", "merge": "merged", "schedule": "scheduled",
        "archive": "archived", "refresh": "refreshed"}


def cap(s):
    return s[0].upper() + s[1:]


class Gen:
    def __init__(self, seed, receivers):
        self.r = random.Random(seed)
        self.receivers = receivers
        self.count = 0

    def recv(self):
        return self.r.choice(self.receivers)

    def level(self, ok=True):
        return self.r.choice(["debug", "info", "info", "trace"] if ok else ["warn", "error"])

    def stmt(self, noun, indent):
        """One log statement in a random style; returns lines."""
        self.count += 1
        r = self.r
        rc = self.recv()
        style = r.randrange(10)
        pad = " " * indent
        v = f"{noun}Id"
        if style == 0:
            return [f'{pad}{rc}.{self.level()}("{cap(noun)} {{}} {PAST[r.choice(VERBS)]}", {v});']
        if style == 1:
            return [f'{pad}{rc}.{self.level(False)}("Failed to {r.choice(VERBS)} {noun} {{}}", {v}, e);']
        if style == 2:
            return [f'{pad}{rc}.info("Processed " + count + " {noun}s in " + (end - start) + " ms");']
        if style == 3:
            return [f'{pad}{rc}.debug("{cap(noun)} {{}} is {{}}", {v}, active ? "active" : "idle");']
        if style == 4:
            return [f'{pad}{rc}.{self.level()}("{cap(r.choice(VERBS))} {noun} {{}} for {{}} after {{}} attempts",',
                    f'{pad}        {v}, owner.getName(),',
                    f'{pad}        attempts + 1);']
        if style == 5:
            return [f'{pad}{rc}.warn("{cap(noun)} queue size {{}} exceeds limit {{}}", queue.size(), limit);']
        if style == 6:
            return [f'{pad}{rc}.{self.level()}("Starting {noun} {r.choice(VERBS)}");']
        if style == 7:
            return [f'{pad}{rc}.info("{cap(noun)} " + {v} + " moved to state " + state.name());']
        if style == 9:
            # error wording at a low level: the lint should notice
            return [f'{pad}{rc}.debug("Failed to {r.choice(VERBS)} {noun} {{}}, retrying", {v});']
        return [f'{pad}{rc}.trace("Entering {r.choice(VERBS)} with {{}} items, mode={{}}", items.size(), config.getMode());']

    def body_line(self, noun, indent):
        pad = " " * indent
        return self.r.choice([
            f"{pad}{noun}Cache.put({noun}Id, {noun});",
            f"{pad}count += {noun}.getItems().size();",
            f"{pad}long start = System.nanoTime();",
            f"{pad}long end = System.nanoTime();",
            f"{pad}attempts = Math.min(attempts + 1, maxAttempts);",
            f"{pad}state = State.{self.r.choice(['READY', 'RUNNING', 'DONE'])};",
            f"{pad}queue.offer({noun});",
        ])

    def method(self, noun, verb, long=False):
        r = self.r
        lines = [f"    public void {verb}{cap(noun)}(String {noun}Id, int limit) {{"]
        n_blocks = 40 if long else r.randint(1, 3)
        for b in range(n_blocks):
            for _ in range(r.randint(1, 3)):
                lines.append(self.body_line(noun, 8))
            shape = r.randrange(5)
            if shape == 0:
                lines.append(f"        if ({noun}Id == null || limit < {b}) {{")
                lines += self.stmt(noun, 12)
                lines.append("            return;")
                lines.append("        }")
            elif shape == 1:
                lines.append("        try {")
                lines.append(self.body_line(noun, 12))
                lines.append("        } catch (IOException e) {")
                lines += self.stmt(noun, 12)
                lines.append("        }")
            elif shape == 2:
                lines.append(f"        for (Item item : {noun}.getItems()) {{")
                lines.append("            // weight by quantity")
                lines.append("            total += item.getWeight() * item.getQuantity();")
                lines += self.stmt(noun, 12)
                lines.append("        }")
            else:
                lines += self.stmt(noun, 8)
        if r.random() < 0.3:
            # shares its line with an `if`, so extraction must skip it
            lines.append(f'        if (debugEnabled) {self.recv()}.debug("{noun} done");')
        lines.append("    }")
        return lines

    def class_file(self, package, name, nouns, long=False):
        r = self.r
        lines = [f"package {package};", "",
                 "import java.io.IOException;",
                 "import org.slf4j.Logger;",
                 "import org.slf4j.LoggerFactory;", "",
                 "/**",
                 f" * Handles {', '.join(nouns)} lifecycle.",
                 " */",
                 f"public class {name} {{",
                 f"    private static final Logger LOG = LoggerFactory.getLogger({name}.class);",
                 f"    private final Logger logger = LoggerFactory.getLogger(\"{package}.{name}\");",
                 "    private final Logger log = LOG;", "",
                 "    static {",
                 f'        LOG.info("{name} loaded");',
                 "    }", ""]
        verbs = r.sample(VERBS, len(nouns))
        for i, (noun, verb) in enumerate(zip(nouns, verbs)):
            lines += self.method(noun, verb, long=long and i == 0)
            lines.append("")
        lines.append(f"    private String describe({cap(nouns[0])} value) {{ return String.valueOf(value); }}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def project(name, package, seed, receivers, files):
    root = HERE / name
    if root.exists():
        shutil.rmtree(root)
    src = root / "src/main/java" / package.replace(".", "/")
    src.mkdir(parents=True)
    g = Gen(seed, receivers)
    for i in range(files):
        nouns = g.r.sample(NOUNS, g.r.randint(3, 5))
        cls = cap(nouns[0]) + g.r.choice(["Service", "Manager", "Handler", "Worker", "Store"]) + str(i)
        (src / f"{cls}.java").write_text(g.class_file(package, cls, nouns, long=(i % 6 == 0)))
    return g.count


UNIQUE = iter(f"w{i:03d}" for i in range(10000))


def unit(method, stmt, words):
    body = "\n".join(f"        int {w} = {next(UNIQUE)}.size();" for w in words)
    return f"public class {cap(method)}Case {{\n    void {method}() {{\n{body}\n        {stmt}\n    }}\n}}\n"


def contamination():
    root = HERE.parent / "contamination"
    if root.exists():
        shutil.rmtree(root)
    (root / "train").mkdir(parents=True)
    (root / "test").mkdir()
    shared_long = 'LOG.info("Reconciled {} ledger entries for tenant {} in region {}", entryCount, tenantId, regionCode);'
    shared_mid = 'LOG.warn("Lease {} expired before renewal window {}", leaseId, windowId);'
    (root / "train/Reconciler.java").write_text(unit("reconcile", shared_long, ["alpha", "beta"]))
    (root / "train/LeaseKeeper.java").write_text(unit("keepLease", shared_mid, ["gamma"]))
    for i in range(10):
        if i == 3:
            stmt = shared_long
        elif i == 7:
            stmt = shared_mid
        else:
            stmt = f'LOG.debug("Case{i} step {{}} ok", step{i});'
        (root / f"test/Case{i}.java").write_text(unit(f"case{i}", stmt, [f"k{i}a", f"k{i}b"]))


if __name__ == "__main__":
    a = project("ordersvc", "com.example.orders", 11, ["LOG", "log"], 14)
    b = project("streamkit", "org.streamkit.core", 23, ["logger", "LOG", "this.logger"], 14)
    contamination()
    print(f"ordersvc: {a} statements, streamkit: {b} statements")
