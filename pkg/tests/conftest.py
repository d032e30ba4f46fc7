import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# fixed example streams so every run sees the same cases
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")
