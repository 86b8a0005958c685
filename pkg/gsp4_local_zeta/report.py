import json

from jinja2 import Template

from gsp4_local_zeta.verifier import VerifyReport


jinja_template = """\
{{ report.case }} / {{ report.mode }} | order: {{ report.order }} | seed: {{ report.seed }}
{% for name, value in report.params|dictsort %}
    {{ name }} = {{ value }}
{% endfor %}
{% for check in report.checks %}
{{ "PASS" if check.passed else "FAIL" }}  {{ check.name }}
{% if check.first_mismatch is not none %}
      first mismatch at t^{{ check.first_mismatch.t_power }}
        lhs: {{ check.first_mismatch.lhs }}
        rhs: {{ check.first_mismatch.rhs }}
{% endif %}
{% endfor %}
{% for name, value in report.conventions|dictsort %}
convention {{ name }}: {{ value }}
{% endfor %}
{{ passed }}/{{ report.checks|length }} checks passed
"""

_template = Template(jinja_template, trim_blocks=True, keep_trailing_newline=True)


def render_text(report: VerifyReport) -> str:
    passed = sum(1 for check in report.checks if check.passed)
    return _template.render(report=report, passed=passed)


def to_json(report: VerifyReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2)
