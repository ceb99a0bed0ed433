"""Run every claim on a reproducible batch of random instances.

The tally shows how often each claim's hypotheses are met (holds) versus
not (vacuous), and confirms that nothing fails.
"""

from collections import Counter

from syzdim import generate_corpus, run_checks

tally = Counter()
for inst in generate_corpus(seed=7, count=20):
    report = run_checks(inst)
    print(f"{inst.label:<14} betti {' '.join(map(str, report.betti)):<24}",
          " ".join(f"{k}={v.status}" for k, v in report.verdicts.items()))
    tally.update((k, v.status) for k, v in report.verdicts.items())

print()
for claim in ("strict", "supp", "main", "dim", "shrink", "quick"):
    counts = {s: n for (c, s), n in tally.items() if c == claim}
    print(f"{claim:<7}", counts)
