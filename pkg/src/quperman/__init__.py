"""quperman: a maintainability target-setting workbench.

Measures source code into a 1-10 health score, benchmarks it against a
corpus, and evaluates what-if improvement targets on a benefit/cost
model with investment barriers and quality gates.
"""

__version__ = "0.1.0"
