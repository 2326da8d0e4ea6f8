#!/usr/bin/env python3
"""Independent count of a .srs file's labels and of one bigram.

Used to freeze the expected values in the corpus tests. Shares no code with
the Rust implementation: element lines are matched by regex and terms are
counted with a separate tokenizer.

    python3 scripts/corpus_counts.py corpus/sbe.srs "sales agent"
"""

import collections
import json
import re
import sys

ELEMENT = re.compile(r'^( *)\[([^\]]+)\]\s+([a-z-]+)(?:\(([^)]*)\))?\s*([a-z0-9_-]+)?\s*::\s*(.*)$')

STOP = set("""
a about above after again against all also am an and any are as at be because been before being below
between both but by can cannot could did do does doing down during each either else etc every few for
from further had has have having he her here hers herself him himself his how i if in into is it its
itself just may me might more most must my myself neither no nor not now of off on once only or other
ought our ours ourselves out over own same shall she should so some such than that the their theirs
them themselves then there these they this those through thus to too under until up upon us very via
was we were what when where whether which while who whom whose why will with within without would you
your yours yourself yourselves
""".split())


def logical_lines(text):
    out, pending = [], None
    for raw in text.split("\n"):
        line = raw if pending is None else pending + " " + raw.lstrip()
        pending = None
        if line.rstrip().endswith("\\"):
            pending = line.rstrip()[:-1].rstrip()
        else:
            out.append(line)
    return out


def statement(rest):
    rest = rest.strip()
    if rest.startswith('"'):
        m = re.match(r'"((?:[^"\\]|\\.)*)"', rest)
        return m.group(1).replace('\\"', '"').replace("\\\\", "\\")
    return re.split(r"\s#", rest)[0].strip()


def terms(text):
    """Runs of content words; runs of two or more give bigrams."""
    out = []
    for chunk in re.split(r"[^\w\s'’-]|_", text):
        run = []
        for word in chunk.split():
            w = word.replace("’", "'").lower()
            if w.endswith("'s"):
                w = w[:-2]
            w = w.strip("'-")
            ok = (len(w) >= 2 and "'" not in w and not re.fullmatch(r"[0-9-]+", w)
                  and w not in STOP)
            if ok:
                run.append(w)
            else:
                out.extend(flush(run))
                run = []
        out.extend(flush(run))
    return out


def flush(run):
    if len(run) == 1:
        return run
    return [f"{a} {b}" for a, b in zip(run, run[1:])]


def main():
    path, bigram = sys.argv[1], sys.argv[2]
    categories = collections.Counter()
    subcategories = collections.Counter()
    texts = []
    mode = None
    for line in logical_lines(open(path, encoding="utf-8").read()):
        s = line.strip()
        if s.startswith("@glossary") or s.startswith("@relations"):
            mode = "block"
            continue
        if s.startswith("@end"):
            mode = None
            continue
        if mode:
            continue
        m = ELEMENT.match(line)
        if not m:
            continue
        categories[m.group(3)] += 1
        for sub in (m.group(4) or "").split(","):
            if sub.strip():
                subcategories[sub.strip()] += 1
        texts.append(statement(m.group(6)))
    counts = collections.Counter(t for text in texts for t in terms(text))
    print(json.dumps({
        "elements": sum(categories.values()),
        "categories": dict(sorted(categories.items())),
        "subcategories": dict(sorted(subcategories.items())),
        "most_frequent": categories.most_common(1)[0][0],
        "bigram": {bigram: counts[bigram]},
    }, indent=2))


if __name__ == "__main__":
    main()
