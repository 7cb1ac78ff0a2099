"""Classification reports."""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from models.plan import BlowupPlan


class Case(str, Enum):
    """Outcome of the classification of one plan."""
    NON_MOISHEZON = "NonMoishezon"
    EXCLUDED_H0_GEQ_3 = "ExcludedH0Geq3"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    
    @property
    def is_classified(self) -> bool:
        """True for the three Moishezon types that survive every exclusion."""
        return self in (Case.TYPE_I, Case.TYPE_II, Case.TYPE_III)


class ClassificationReport(BaseModel):
    """Everything computed for one plan. Field names are part of the JSON contract."""
    plan: BlowupPlan
    string: List[int] = Field(default_factory=list)
    canonical_string: List[int] = Field(default_factory=list)
    k: int = 0
    h0_antican: Optional[int] = None
    h0_biantican: Optional[int] = None
    h0_2F: Optional[int] = None
    movable_selfint: Optional[int] = None
    case: Optional[Case] = None
    
    # Fixed part of |2(-K)| as component index -> multiplicity
    fixed_part: Dict[int, int] = Field(default_factory=dict)
    
    # Cross-check data
    rule_h0: Dict[int, Optional[int]] = Field(default_factory=dict)
    oracle_h0: Dict[int, int] = Field(default_factory=dict)
    quadric_count: Optional[int] = None
    image_dimension: Optional[int] = None
    
    # Predicted for the threefold from the surface image, not computed on it
    threefold_quadrics: Optional[int] = None
    threefold_dimension: Optional[int] = None
    image_description: str = ""
    errors: List[str] = Field(default_factory=list)
    
    @property
    def ok(self) -> bool:
        return not self.errors and self.case is not None
