from core.combinatorics.stirling import (
    StirlingTable, TouchardPoly, stirling_table, stirling2, stirling2_explicit,
    bell_number, touchard, xd_expand_apply,
)
