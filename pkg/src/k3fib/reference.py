"""Reference classification data: the 52 fibrations with their invariants.

Each row: (id, lattice name, assignment text, reducible-fiber root types,
Mordell-Weil rank, Mordell-Weil torsion).  Root types are '+'-joined ADE
labels sorted by (family, rank); torsion is '0', 'Z/n' or 'Z/a x Z/b'.
"""

REFERENCE_ROWS = [
    ("1", "E8^3", "A5+A1 in E8", "A1+E8+E8", 1, "0"),
    ("2", "E8^3", "A1 in E8; A5 in E8", "A1+A2+E7+E8", 0, "0"),
    ("3", "E8 D16", "A5+A1 in E8", "A1+D16", 1, "Z/2"),
    ("4", "E8 D16", "A5+A1 in D16", "A1+D8+E8", 1, "0"),
    ("5", "E8 D16", "A5 in E8; A1 in D16", "A1+A1+A2+D14", 0, "Z/2"),
    ("6", "E8 D16", "A1 in E8; A5 in D16", "D10+E7", 1, "0"),
    ("7", "E7^2 D10", "A5+A1 in E7", "D10+E7", 1, "Z/2"),
    ("8", "E7^2 D10", "A5+A1 in D10", "A1+A1+A1+E7+E7", 1, "Z/2"),
    ("9", "E7^2 D10", "A1 in E7; A5 in E7", "A1+D6+D10", 1, "Z/2"),
    ("10", "E7^2 D10", "A1 in E7; A5 in E7", "A2+D6+D10", 0, "Z/2"),
    ("11", "E7^2 D10", "A5 in E7; A1 in D10", "A1+A1+D8+E7", 1, "Z/2"),
    ("12", "E7^2 D10", "A5 in E7; A1 in D10", "A1+A2+D8+E7", 0, "Z/2"),
    ("13", "E7^2 D10", "A1 in E7; A5 in D10", "D4+D6+E7", 1, "Z/2"),
    ("14", "E7 A17", "A5+A1 in E7", "A17", 1, "Z/3"),
    ("15", "E7 A17", "A5+A1 in A17", "A9+E7", 2, "0"),
    ("16", "E7 A17", "A5 in E7; A1 in A17", "A1+A15", 2, "0"),
    ("17", "E7 A17", "A5 in E7; A1 in A17", "A2+A15", 1, "0"),
    ("18", "E7 A17", "A1 in E7; A5 in A17", "A11+D6", 1, "0"),
    ("19", "D24", "A5+A1 in D24", "A1+D16", 1, "0"),
    ("20", "D12^2", "A5+A1 in D12", "A1+D4+D12", 1, "Z/2"),
    ("21", "D12^2", "A1 in D12; A5 in D12", "A1+D6+D10", 1, "Z/2"),
    ("22", "D8^3", "A5+A1 in D8", "A1+D8+D8", 1, "Z/2"),
    ("22(b)", "D8^3", "A5+A1 in D8", "A1+D8+D8", 1, "Z/2"),
    ("23", "D8^3", "A1 in D8; A5 in D8", "A1+A1+A1+D6+D8", 1, "Z/2 x Z/2"),
    ("24", "D9 A15", "A5+A1 in D9", "A1+A15", 2, "Z/2"),
    ("25", "D9 A15", "A5+A1 in A15", "A7+D9", 2, "0"),
    ("26", "D9 A15", "A5 in D9; A1 in A15", "A3+A13", 2, "0"),
    ("27", "D9 A15", "A1 in D9; A5 in A15", "A1+A9+D7", 1, "0"),
    ("28", "E6^4", "A1 in E6; A5 in E6", "A1+A5+E6+E6", 0, "Z/3"),
    ("29", "A11 E6 D7", "A5+A1 in A11", "A3+D7+E6", 2, "0"),
    ("30", "A11 E6 D7", "A5 in E6; A1 in D7", "A1+A1+A11+D5", 0, "Z/4"),
    ("31", "A11 E6 D7", "A5 in E6; A1 in A11", "A1+A9+D7", 1, "0"),
    ("32", "A11 E6 D7", "A1 in E6; A5 in D7", "A5+A11", 2, "Z/3"),
    ("33", "A11 E6 D7", "A5 in D7; A1 in A11", "A9+E6", 3, "0"),
    ("34", "A11 E6 D7", "A1 in D7; A5 in A11", "A1+A5+D5+E6", 1, "0"),
    ("35", "A11 E6 D7", "A1 in E6; A5 in A11", "A5+A5+D7", 1, "0"),
    ("36", "D6^4", "A1 in D6; A5 in D6", "A1+D4+D6+D6", 1, "Z/2 x Z/2"),
    ("37", "D6 A9^2", "A5+A1 in A9", "A1+A9+D6", 2, "Z/2"),
    ("38", "D6 A9^2", "A5 in A9; A1 in A9", "A3+A7+D6", 2, "0"),
    ("39", "D6 A9^2", "A5 in A9; A1 in D6", "A1+A3+A9+D4", 1, "Z/2"),
    ("40", "D6 A9^2", "A1 in A9; A5 in D6", "A7+A9", 2, "0"),
    ("41", "D5^2 A7^2", "A5+A1 in A7", "A7+D5+D5", 1, "Z/4"),
    ("42", "D5^2 A7^2", "A5 in A7; A1 in A7", "A1+A5+D5+D5", 2, "0"),
    ("43", "D5^2 A7^2", "A5 in A7; A1 in D5", "A1+A1+A3+A7+D5", 1, "Z/4"),
    ("44", "A8^3", "A5+A1 in A8", "A8+A8", 2, "Z/3"),
    ("45", "A8^3", "A1 in A8; A5 in A8", "A2+A6+A8", 2, "0"),
    ("46", "A24", "A5+A1 in A24", "A16", 2, "0"),
    ("47", "A12^2", "A5+A1 in A12", "A4+A12", 2, "0"),
    ("48", "A12^2", "A5 in A12; A1 in A12", "A6+A10", 2, "0"),
    ("49", "A5^4 D4", "A5 in A5; A1 in A5", "A3+A5+A5+D4", 1, "Z/2"),
    ("50", "A5^4 D4", "A5 in A5; A1 in D4", "A1+A1+A1+A5+A5+A5", 0, "Z/2 x Z/6"),
    ("51", "A6^4", "A5 in A6; A1 in A6", "A4+A6+A6", 2, "0"),
]

# lattice order used for presenting the classification (groups the reference ids)
CLASSIFICATION_LATTICE_ORDER = [
    "E8^3", "E8 D16", "E7^2 D10", "E7 A17", "D24", "D12^2", "D8^3", "D9 A15",
    "E6^4", "A11 E6 D7", "D6^4", "D6 A9^2", "D5^2 A7^2", "A8^3", "A24",
    "A12^2", "A5^4 D4", "A6^4", "D4^6", "A4^6", "A3^8", "A2^12", "A1^24",
]

EXTREMAL_IDS = {"2", "5", "10", "12", "28", "30", "50"}
