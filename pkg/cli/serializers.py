from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field


class Check(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    expected: Any = None
    actual: Any = None
    passed: bool = Field(alias="pass")

    @classmethod
    def equal(cls, name, expected, actual):
        return cls(name=name, expected=expected, actual=actual, passed=expected == actual)


class Report(BaseModel):
    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    outputs: Any = None
    checks: List[Check] = Field(default_factory=list)

    @property
    def ok(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def dump(self):
        return self.model_dump(mode="json", by_alias=True)
