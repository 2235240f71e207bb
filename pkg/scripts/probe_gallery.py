#!/usr/bin/env python3
"""Probe a gallery of functions and print verdicts with gradient estimates.

Smooth functions come back consistent with estimates near the analytic
gradient; the kinked ones are contradicted by disagreeing secant-plane
limits along different approach directions.
"""

import math

from secantplane import (
    Point2,
    ProbeConfig,
    SequenceKind,
    SequenceSpec,
    Vec2,
    default_sequence_specs,
    probe,
)

# (label, f, base, analytic gradient or None, probe opposite axis directions)
GALLERY = [
    ("x^2+y^2 @ (0,0)", lambda x, y: x * x + y * y, Point2(0.0, 0.0), None, False),
    ("x^2+y^2 @ (1,2)", lambda x, y: x * x + y * y, Point2(1.0, 2.0), (2.0, 4.0), False),
    ("sin(x)cos(y) @ (0.5,0.2)", lambda x, y: math.sin(x) * math.cos(y),
     Point2(0.5, 0.2),
     (math.cos(0.5) * math.cos(0.2), -math.sin(0.5) * math.sin(0.2)), False),
    ("|x| @ (0,0)", lambda x, y: abs(x), Point2(0.0, 0.0), None, True),
    ("sqrt(x^2+y^2) @ (0,0)", lambda x, y: math.hypot(x, y), Point2(0.0, 0.0),
     None, True),
]


def main():
    for name, f, base, grad, opposite_axes in GALLERY:
        if opposite_axes:
            specs = (
                SequenceSpec(SequenceKind.RADIAL_ORTHOGONAL, base=base,
                             direction=Vec2(1.0, 0.0)),
                SequenceSpec(SequenceKind.RADIAL_ORTHOGONAL, base=base,
                             direction=Vec2(-1.0, 0.0)),
            )
        else:
            specs = default_sequence_specs(base)
        report = probe(f, base, ProbeConfig(sequence_specs=specs))
        line = f"{name:<28} -> {report.verdict.value}"
        if report.jacobian_estimate is not None:
            a, b = report.jacobian_estimate
            line += f"  estimate=({a:+.8f}, {b:+.8f})"
            if grad is not None:
                err = max(abs(a - grad[0]), abs(b - grad[1]))
                line += f"  |err|={err:.2e}"
        else:
            line += f"  max_disagreement={report.max_disagreement:.6f}"
        print(line)


if __name__ == "__main__":
    main()
