from .census_pipeline import CensusPipeline
from .census_pipeline_input import CensusPipelineInput

__all__ = ["CensusPipeline", "CensusPipelineInput"]
