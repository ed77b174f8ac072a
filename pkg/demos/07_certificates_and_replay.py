"""
Machine-checkable certificates: write, digest, tamper, replay
==============================================================

Every check and sweep can emit a JSON certificate whose digest is the
SHA-256 of its canonical serialization.  Replay re-runs the computation
from the stored parameters and data alone, so a certificate is evidence
anyone can re-check -- and any tampering is caught either by the digest
or by the recomputation.
"""

import json
import tempfile
from pathlib import Path

from transverse.cli import content_digest, run, write_document

workdir = Path(tempfile.mkdtemp(prefix="transverse_demo_"))
set_file = str(workdir / "set.json")
cert_file = str(workdir / "cert.json")

# Build the seven-point span set and certify its non-bilinearity.
run(["construct", "sigma-fig2", "--out", set_file])
code = run(["check", "bilinear", "--set", set_file, "--cert", cert_file])
print("check exit code:", code, "(1 means: not bilinear, as expected)")

cert = json.loads(Path(cert_file).read_text())
print("kind:", cert["kind"])
print("digest:", cert["digest"][:32], "...")

# Replay recomputes everything from the file alone.
print("\nreplaying the certificate:")
code = run(["replay", "--cert", cert_file])
print("replay exit code:", code)

# Now forge the witness and fix up the digest to match: the recomputation
# still rejects the file because the stored payload no longer reproduces.
cert["payload"]["witness"] = [0, 1]
cert["digest"] = content_digest(cert)
write_document(cert, cert_file)
print("\nreplaying the forged certificate:")
code = run(["replay", "--cert", cert_file])
print("replay exit code:", code, "(1 means: forgery detected)")
