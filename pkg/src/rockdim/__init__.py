"""Dimensions of RoCK blocks for double covers of symmetric groups, computed in Fock spaces of type A_{2l}^{(2)}."""
