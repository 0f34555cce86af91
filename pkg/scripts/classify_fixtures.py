#!/usr/bin/env python3
"""Print the classification table for every shipped fixture."""

from constella import fixtures
from constella.classify import ClassificationReport, classify_semigroupoid


def main():
    names = sorted(fixtures.all_fixtures())
    header = ["fixture"] + list(ClassificationReport.FIELDS)
    rows = [header]
    for name in names:
        report = classify_semigroupoid(fixtures.all_fixtures()[name])
        rows.append(
            [name] + ["yes" if value else "-" for value in report.flags().values()]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))


if __name__ == "__main__":
    main()
