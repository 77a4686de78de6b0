"""sptorsion: exact torsion-order calculus for the integral symplectic group.

Decides which finite orders occur in Sp(2g,Z), counts them, finds the
maximum, constructs explicit integer-matrix witnesses, and certifies the
explicit inequalities the theory rests on at desk scale.
"""

__version__ = "0.1.0"
