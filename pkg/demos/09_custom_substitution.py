"""Run the full 1D pipeline on rules given as text (Thue-Morse here)."""

from tilespace import parse_rules_text, subshift_report

s = parse_rules_text("""
a -> ab
b -> ba
""")

report = subshift_report(s)

print(f"alphabet {report['alphabet']}, rules {report['rules']}")
print(f"{len(report['collaredLetters'])} collared letters:")
for entry in report["collaredLetters"]:
    print(f"  {entry['name']} = {entry['window']}")

bf = report["borderForcing"]
print(f"\nborder forcing at k = {bf['minimalK']}")
print(f"graph: {report['graph']['vertices']} vertices, "
      f"{report['graph']['edges']} edges")
print(f"H1 = Z^{report['cohomology']['H1']['rank']}, "
      f"hull H1 rational dimension "
      f"{report['limits']['H1']['rationalDim']}")
print("\nchecks:", ", ".join(
    f"{c['name']}={'ok' if c['passed'] else 'FAIL'}"
    for c in report["checks"]))
