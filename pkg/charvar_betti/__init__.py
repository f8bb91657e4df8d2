from .assembler import betti_series, closed_form_n2, min_valid_genus
from .graded import Group, coefficient_system
from .partitions import Partition
from .report import BettiReport
from .series import PoincareSeries
from .summarize import write_summary_file

__VERSION__ = "0.1.0"
