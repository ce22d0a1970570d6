import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

from ..errors import DomainError
from ..numkern import DEFAULT_POLICY, TolerancePolicy, intersect, spectral_norm, subspaces_equal
from ..quadform import perp, radical, restrict
from ..symplectic import ChartSegment, Lagrangian, LagrangianPath, chart
from .coisotropic import ReductionSetup
from .terms import Projection, reduced_form

logger = logging.getLogger(__name__)


@dataclass
class IdentityReport:
    """Outcome of the three chart identities over the samples of one chart segment."""
    kernel: bool = True
    perp: bool = True
    form: bool = True
    samples: int = 0
    max_form_residual: float = 0.0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.kernel and self.perp and self.form

    def as_dict(self) -> Dict[str, Any]:
        return {'kernel': self.kernel, 'perp': self.perp, 'form': self.form, 'samples': self.samples}


def chart_identities(setup: ReductionSetup, path: LagrangianPath, l0: Lagrangian,
                     segment: ChartSegment, policy: TolerancePolicy = DEFAULT_POLICY) -> IdentityReport:
    """
    On a chart whose complement contains W^omega, check at each sample t:
    ker Q_t = l(t) ∩ L0, V^{Q_t} = E_t and Q_t restricted to V^{Q_t} equals q_t,
    where Q_t is the chart form of l(t) and V = L0 ∩ W.
    """
    if not segment.l1.sub.contains(setup.w_perp, policy):
        raise DomainError("Chart complement of the segment does not contain W^omega")
    proj = Projection(setup, l0, policy)
    v = intersect(l0.sub, setup.w, policy)
    report = IdentityReport()

    for j in range(segment.first, segment.last + 1):
        l = path.samples[j]
        q_t = chart(l0, segment.l1, l, policy)
        rf = reduced_form(setup, l, proj, policy)
        report.samples += 1

        if not subspaces_equal(radical(q_t, policy), intersect(l.sub, l0.sub, policy), policy):
            report.kernel = False
            report.failures.append({'sample': j, 'identity': 'kernel'})

        v_perp = perp(q_t, v, policy)
        if not subspaces_equal(v_perp, rf.e, policy):
            report.perp = False
            report.failures.append({'sample': j, 'identity': 'perp', 'dims': [v_perp.dim, rf.e.dim]})
            continue

        if rf.e.dim:
            restricted = restrict(q_t, rf.e, policy).matrix
            residual = spectral_norm(restricted - rf.form.matrix)
            scale = max(1.0, spectral_norm(restricted), spectral_norm(rf.form.matrix))
            report.max_form_residual = max(report.max_form_residual, residual / scale)
            if residual > policy.angle_tol * scale:
                report.form = False
                report.failures.append({'sample': j, 'identity': 'form', 'residual': residual})

    logger.debug(f"identities: {report.samples} samples, holds={report.holds}")
    return report
