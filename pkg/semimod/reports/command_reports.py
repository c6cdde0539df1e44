from .base import BaseReport


class GapsReport(BaseReport):
    template_path = "gaps.tmpl"


class LeanReport(BaseReport):
    template_path = "lean.tmpl"


class DualReport(BaseReport):
    template_path = "dual.tmpl"


class SyzygyReport(BaseReport):
    template_path = "syzygy.tmpl"


class MatrixReport(BaseReport):
    template_path = "matrix.tmpl"


class PathReport(BaseReport):
    template_path = "path.tmpl"


class ResolutionReport(BaseReport):
    template_path = "resolution.tmpl"


class CensusTextReport(BaseReport):
    template_path = "census.tmpl"


class OrbitReport(BaseReport):
    template_path = "orbit.tmpl"
