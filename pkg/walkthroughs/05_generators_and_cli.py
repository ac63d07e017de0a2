# %% [markdown]
# # Generators and the command line
#
# Instance families are reproducible from a small spec, which also
# round-trips through JSON.

# %%
import json
import subprocess
import sys

from hyperdp.genlib import GenSpec, generate
from hyperdp.hypercore import classify

spec = GenSpec("unicyclic", r=3, m=1, p=3, seed=7)
H = generate(spec)
print(json.dumps(spec.to_json()), H.n, H.m, classify(H).classification)

# %% [markdown]
# The `hyperdp` command runs every operation on a file or generated instance
# and prints exact JSON (or CSV).

# %%
cmd = [sys.executable, "-m", "hyperdp.cli", "gap", "--gen", "loose_cycle", "--r", "3", "--p", "4",
       "--kmin", "2", "--kmax", "3", "--format", "csv"]
print(subprocess.run(cmd, capture_output=True, text=True, check=True).stdout)
