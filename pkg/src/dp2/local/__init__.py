"""Local analysis: Hilbert symbols, p-adic point enumeration, invariant
profiles of Azumaya classes, exact polynomial identities over small
number fields, and the diagonal-cubic pipeline."""
