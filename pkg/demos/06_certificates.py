"""
Certificates: from closure to ring-theoretic conclusions
========================================================

Once a family is closed, the quadratic squarefree Groebner basis of
its presentation ideal is enough to conclude that the algebra is
Koszul, a normal domain, and Cohen-Macaulay, each conclusion carried
by a classical theorem recorded in the certificate.  The instance
below takes the first three powers of the maximal ideal in three
variables.
"""
import json
import pathlib

from reescert import build_certificate, certificate_text, family_from_file

here = pathlib.Path(__file__).parent
fam = family_from_file(here / "families" / "maxpowers3.json")

cert = build_certificate(fam)
print(certificate_text(cert))

print("\nconclusions with citations:")
for name in cert["conclusions"]:
    print(f"  {name}: {cert['citations'][name]}")

print("\nfull JSON certificate:")
print(json.dumps(cert, indent=2))
