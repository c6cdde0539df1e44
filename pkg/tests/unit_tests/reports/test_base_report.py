import pytest

from semimod.algebra.semigroup import GapCoord
from semimod.exceptions import TemplateFileNotFoundError
from semimod.reports import GapsReport, LeanReport
from semimod.reports.base import BaseReport


class InlineReport(BaseReport):
    template = """{% for gen in gens %}
{{ gen }}
{% endfor %}


done"""


class MissingReport(BaseReport):
    template_path = "missing.tmpl"


class EmptyReport(BaseReport):
    pass


class TestBaseReport:
    def test_inline_template(self):
        report = InlineReport(gens=[0, 8, 6])

        assert report.to_string() == "0\n8\n6\n\ndone\n"
        assert str(report) == report.to_string()

    def test_template_file(self):
        report = GapsReport(gaps=[1, 2], coords=[GapCoord(4, 2), GapCoord(1, 4)])

        assert report.render() == "1 (a=4,b=2)\n2 (a=1,b=4)\n"

    def test_missing_template_file(self):
        with pytest.raises(TemplateFileNotFoundError, match="MissingReport"):
            MissingReport()

    def test_no_template(self):
        with pytest.raises(TemplateFileNotFoundError):
            EmptyReport()

    def test_lean_report(self, gamma57, example_lean):
        report = LeanReport(
            semigroup=gamma57,
            input=[3, 11, 9, 12],
            shift=3,
            lean=example_lean,
            generator_count=4,
        )

        assert report.to_string().split("\n") == [
            "semigroup: <5,7>",
            "input: 3 11 9 12",
            "normalized by shifting 3",
            "lean set: {0,8,6,9} (4 generators)",
            "  0",
            "  8 (a=4,b=1)",
            "  6 (a=3,b=2)",
            "  9 (a=1,b=3)",
            "",
        ]
