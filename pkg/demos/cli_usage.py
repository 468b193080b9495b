# %% [markdown]
# # Command line
#
# Every subcommand prints JSON lines. Exit codes: 0 ok, 2 bad input,
# 3 equation violated, 4 degenerate input.

# %%
import json
import pathlib
import subprocess
import sys
import tempfile

tmp = pathlib.Path(tempfile.mkdtemp())
params = tmp / "law.json"
params.write_text(json.dumps({"c": 1.0, "y": 0.0, "lambda": 1.0, "alpha": 0.5}))


def run(*args):
    done = subprocess.run([sys.executable, "-m", "goldie_lab.cli", *map(str, args)], capture_output=True, text=True)
    print(f"$ goldie-lab {' '.join(map(str, args))}  -> exit {done.returncode}")
    print(done.stdout.strip() or done.stderr.strip())


# %%
run("eval", params, "--t", "0.5,1,2")
run("chfe-check", params, "--n-max", 20)
run("reduce", params)

# %%
seq = tmp / "a.csv"
seq.write_text("n,a_n\n" + "".join(f"{n},{n ** 2}\n" for n in range(1, 11)))
run("identify", seq)
run("kernel", "--F", "log", "--phi", "identity", "--t", "1")
run("appendix", "--k", 0.5, "--method", "extrapolated")

# %% [markdown]
# Failures come back as exit codes with a message on stderr.

# %%
flat = tmp / "flat.csv"
flat.write_text("n,a_n\n1,1\n2,1\n3,1\n")
run("identify", flat)
run("appendix", "--k", 1.5)
