"""
Exhaustive scans
================

Every normalized set up to a diameter bound is visited once.  Reports are
deterministic and do not depend on the worker count.
"""
# %%
from freiman import check_lemma, dim1_threshold_scan, hypothesis_scan, partial_case_form
from freiman.sets import IntSet

print(check_lemma(IntSet((0, 1, 3))), partial_case_form(5, 2))

# %%
print(dim1_threshold_scan(5, 10).to_dict())

# %%
rep = hypothesis_scan(5, 12)
print(rep.to_json())
