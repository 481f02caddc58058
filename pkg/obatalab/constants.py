"""Project-wide constants to avoid bespoke string literals."""

REPORT_SCHEMA = "obatalab.report/1"
TOOL_VERSION = "0.1.0"

METHOD_FILTRATION = "filtration"
METHOD_ALEKSEEVSKII = "alekseevskii"
HOLONOMY_METHODS = (METHOD_FILTRATION, METHOD_ALEKSEEVSKII)

FAMILY_SU = "su"
FAMILY_SO = "so"
FAMILY_SP = "sp"
FAMILY_E = "e"
FAMILY_E6 = "e6"
FAMILY_E7 = "e7"
FAMILY_E8 = "e8"
FAMILY_F4 = "f4"
FAMILY_G2 = "g2"
FAMILY_HOPF = "hopf"
FAMILIES = (
    FAMILY_SU,
    FAMILY_SO,
    FAMILY_SP,
    FAMILY_E,
    FAMILY_E6,
    FAMILY_E7,
    FAMILY_E8,
    FAMILY_F4,
    FAMILY_G2,
    FAMILY_HOPF,
)

ROLE_E1 = "e1"
ROLE_E2 = "e2"
ROLE_E3 = "e3"
ROLE_E4 = "e4"
ROLE_F = "f"

STATUS_PUBLISHED = "published"
STATUS_UNVERIFIED = "unverified-by-paper"

ENV_DIM_CAP = "OBATA_DIM_CAP"
ENV_PSI_CAP = "OBATA_PSI_CAP"
ENV_MAX_DEPTH = "OBATA_MAX_DEPTH"

__all__ = [
    "REPORT_SCHEMA",
    "TOOL_VERSION",
    "METHOD_FILTRATION",
    "METHOD_ALEKSEEVSKII",
    "HOLONOMY_METHODS",
    "FAMILY_SU",
    "FAMILY_SO",
    "FAMILY_SP",
    "FAMILY_E",
    "FAMILY_E6",
    "FAMILY_E7",
    "FAMILY_E8",
    "FAMILY_F4",
    "FAMILY_G2",
    "FAMILY_HOPF",
    "FAMILIES",
    "ROLE_E1",
    "ROLE_E2",
    "ROLE_E3",
    "ROLE_E4",
    "ROLE_F",
    "STATUS_PUBLISHED",
    "STATUS_UNVERIFIED",
    "ENV_DIM_CAP",
    "ENV_PSI_CAP",
    "ENV_MAX_DEPTH",
]
