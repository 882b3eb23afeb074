"""
A small falsification sweep
===========================

Every bound and strategy is re-checked on a seeded corpus.  A failure is
reported with a minimised witness graph.
"""

from copsrobbers.verify import CorpusSpec, verify_all

spec = CorpusSpec(seed=1, max_n=7, exhaustive_max_n=5, gnp_sizes=(7,), gnp_per_cell=1)
print(len(spec.instances()), "instances")

report = verify_all(spec, threads=2)
print(report.to_text())
