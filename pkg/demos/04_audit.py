"""Run the claim audit on a small budget and look at where it disagrees."""

from collections import Counter

from rqcodes.audit import AuditBudget, run_audit

report = run_audit(AuditBudget(max_q=1, max_k=2, max_n=2))
print(report.summary_line())

# %% Verdict tallies, grouped by the leading number of the claim id.
by_group = Counter((e.claim.split("-")[1].split(".")[0], e.verdict) for e in report.entries)
for (section, verdict), n in sorted(by_group.items()):
    print(f"  group {section}: {n:3d} {verdict}")

# %% A normalization split: the same claim agrees under one gamma and not the other.
for e in report.find("thm-3.5-iii", q=1, k=1):
    j = e.as_json()
    print(f"  {j['claim']} [{j['normalization']}] claimed {j['claimed']} computed {j['computed']} -> {j['verdict']}")

# %% Claims that exceed any attainable value are filtered before comparison.
for e in report.entries:
    if e.verdict == "infeasible-claim":
        print("  first infeasible claim:", e.claim, e.params, "-", e.note)
        break
