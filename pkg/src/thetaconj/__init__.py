"""Watson-Crick (antimorphic involution) combinatorics on words.

Theta-conjugate sets, palindrome and theta-palindrome censuses, constructive
witnesses for the structure theorems and an exhaustive small-range checker.
"""

from .conjugacy import (
    ConjugateSet,
    DeficiencyWitness,
    ThetaConjugateSet,
    conjugates,
    deficiency_witness,
    is_theta_maximal,
    power_growth,
    theta_conjugates,
)
from .errors import (
    AlphabetMismatch,
    DuplicateLetter,
    EmptyWord,
    IncompleteSpec,
    InvalidConfig,
    MalformedGroup,
    ThetaConjError,
    UnknownLetter,
)
from .involution import (
    Alphabet,
    Involution,
    apply_theta,
    enumerate_involutions,
    identity_involution,
    parse_involution,
)
from .structure import (
    PalCensus,
    PalForm,
    PalindromeInThetaConjWitness,
    ThetaPalForm,
    ThetaPalInThetaConjWitness,
    TwoThetaPalConjugacyWitness,
    census,
    count_palindromes_in_theta_conjugates,
    count_theta_palindromes_in_conjugacy_class,
    count_theta_palindromes_in_theta_conjugates,
    palindrome_in_theta_conjugates_witness,
    theta_palindrome_in_theta_conjugates_witness,
    two_theta_palindrome_conjugacy_witness,
)
from .words import (
    PrimitiveRoot,
    is_palindrome,
    is_primitive,
    is_theta_palindrome,
    power,
    primitive_root,
    reverse,
)

__version__ = "0.1.0"
