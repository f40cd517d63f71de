from .formats import (
    ProblemFile,
    ProblemFormatError,
    VlpFile,
    format_problem,
    format_solution,
    parse_problem,
    parse_solution,
    parse_vlp,
    read_text,
    write_text,
)
from .settings import default_config, load_config_file, resolve_config
