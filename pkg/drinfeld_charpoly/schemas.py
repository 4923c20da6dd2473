"""Pydantic schemas for instance files, charpoly reports and benchmark rows."""

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

# An F_q element: an integer (prime field) or its digits over F_p, little-endian
FqValue = Union[int, list[int]]
# An element of L: F_q coefficients of 1, t, ..., t^(n-1)
LValue = list[FqValue]


class InstanceFile(BaseModel):
    """A Drinfeld module instance, optionally with an endomorphism."""

    model_config = ConfigDict(extra="forbid")

    version: Literal[1] = Field(..., description="Schema version")
    p: int = Field(..., ge=2, description="Characteristic")
    e: int = Field(default=1, ge=1, description="Degree of F_q over F_p")
    f: Optional[list[int]] = Field(default=None, description="Modulus of F_q over F_p, little-endian (e > 1)")
    ell: list[FqValue] = Field(..., min_length=2, description="Modulus of L over F_q, little-endian")
    gamma_x: LValue = Field(..., description="Constant coefficient of phi_x")
    delta: list[LValue] = Field(..., min_length=1, description="Delta_1..Delta_r")
    endo: Optional[Union[Literal["frobenius"], list[LValue]]] = Field(
        default=None, description="Endomorphism: 'frobenius' or tau-coefficients"
    )


class CharPolyReport(BaseModel):
    """Result of the charpoly command in JSON form."""

    model_config = ConfigDict(extra="forbid")

    version: Literal[1] = Field(default=1)
    p: int = Field(..., description="Characteristic")
    e: int = Field(default=1, description="Degree of F_q over F_p")
    r: int = Field(..., ge=1, description="Rank")
    d: int = Field(..., ge=0, description="Tau-degree of the endomorphism")
    a: list[list[FqValue]] = Field(..., description="a_0..a_{r-1} in F_q[x], little-endian")
    text: str = Field(..., description="Rendered characteristic polynomial")
    algorithm: str = Field(..., description="Matrix construction used")
    k: int = Field(..., ge=1, description="Precision")
    verified: Optional[bool] = Field(default=None, description="Outcome of --verify, if requested")


class BenchRow(BaseModel):
    """One cell of the benchmark grid."""

    n: int
    r: int
    algorithm: str
    wall_seconds: float
    frobenius_ops: int
    l_muls: int
