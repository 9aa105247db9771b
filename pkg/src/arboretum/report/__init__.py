from .i_report_generator import IReportGenerator
from .batch_report_generator import BatchReportGenerator
