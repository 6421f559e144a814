import os

from hypothesis import settings

# reproducible property runs; HYPOTHESIS_PROFILE=explore for fresh examples
settings.register_profile("ci", derandomize=True, deadline=None, print_blob=True)
settings.register_profile("explore", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))
