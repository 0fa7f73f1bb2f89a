"""Data models and the exact computations.

This package contains:
- lattice: Rational lattices and their finite quotients
- rootdata: Cartan types, root systems and root data
- weyl: Weyl group elements, enumeration and subsystem classification
- braid: Braid words and the Garside normal form
- tits: The Tits group N and the reference lifts sigma(w)
- fundgroup: The group A, varpi^vee, iota and A_G
- centralizer: Semisimple classes, Phi(s), W^0(s), A_W(s) and the brute-force oracle
- lifting: Flat lifts, tau_2 and splitting certificates
- frobenius: Frobenius actions and F-stable splittings
- symplectic: The Sp_2n matrix model
- types: TypedDicts for the JSON documents
- utils: Utility functions (parse_lambda, format_invariants, similarity_score, etc.)
"""
