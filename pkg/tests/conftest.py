import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# Property suites are reproducible by default; pass --hypothesis-seed=N to vary them.
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=150)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))
