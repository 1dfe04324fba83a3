from .format import (
    INF_TOKEN,
    dumps,
    format_csv_rows,
    format_matrix,
    format_real,
    json_real,
    to_jsonable,
)

__all__ = [
    "INF_TOKEN",
    "dumps",
    "format_csv_rows",
    "format_matrix",
    "format_real",
    "json_real",
    "to_jsonable",
]
