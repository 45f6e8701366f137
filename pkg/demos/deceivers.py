"""
Deceiving sequences: tiny programs, random-looking output
=========================================================

The digits of 1,2,3,... concatenated (a Champernowne prefix) pass most
frequency tests yet come from a fixed few-byte description.  A modular
expander that keeps appending (and occasionally extending) its module is
equally tiny yet scores high on copy-counting measures.
"""

from seqcomplexity import GeneratorSpec, champernowne, divergence_report, modular_generate

print("champernowne base 10, first 40 digits:", champernowne(40, 10))
print("champernowne base 2, first 40 digits: ", champernowne(40, 2))

spec = GeneratorSpec(kind="champernowne", base=10, length=1000)
report = divergence_report(champernowne(1000, 10), spec)
print(f"\n1000-digit Champernowne prefix:")
print(f"  description:         {report.description_bits} bits")
print(f"  normalized entropy:  {report.normalized_entropy:.4f} (of max 1.0)")
for name, value in report.measures.items():
    print(f"  {name:10s} -> {value:10.2f}")

# a pure repetition through the modular generator: module never extended
spec = GeneratorSpec(kind="modular", seed="A", period=1000, steps=64)
report = divergence_report(modular_generate(spec), spec)
print(f"\nA^64 via the modular generator:")
print(f"  description:  {report.description_bits} bits")
print(f"  rle length:   {report.measures['rle']:.0f} (string length 64)")
print(f"  split bound:  {report.measures['ma_split']:.0f} joins")

# extensions kick in every `period` steps and grow the module
spec = GeneratorSpec(kind="modular", seed="AB", period=3, steps=12, extension_symbols=("C", "D"))
out = modular_generate(spec)
print(f"\nmodular seed=AB period=3 steps=12 ext=(C,D):")
print(f"  output ({len(out)} chars): {out}")
print(f"  spec JSON: {spec.to_json()}")
