"""
crossratio: exact computations on the cross ratio variety of marked cubic
surfaces -- the F_3^5 orthogonal geometry, W(E6) actions, the D4 Weyl fan,
Chow rank bookkeeping, invariant intersection rings and Gram ranks.
"""

__version__ = "0.1.0"
