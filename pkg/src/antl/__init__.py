"""Exact computations in the affine nilTemperley-Lieb algebra and its particle representation."""

from .center import (
    BasisLabel,
    basis_element,
    basis_word,
    central_from_character,
    central_generator,
    e_word,
    enumerate_basis,
    factorize,
    fntl_dimension,
    projector_monomial,
    unsigned_central_generator,
)
from .element import Element, NotCentral, central_character, is_central, mul, parse_element
from .embeddings import embed_element, embed_word, relation_images, shift_label
from .fock import (
    Config,
    FockVector,
    RepMatrix,
    act_element,
    act_generator,
    act_word,
    configs,
    endomorphism_dimension,
    full_matrix,
    matrix_block,
)
from .normal_form import (
    ZERO,
    InvalidKey,
    NormalForm,
    NotInImage,
    PsiKey,
    Zero,
    canonical_word,
    integral_lift,
    normalize,
    parse_normal_form,
    psi,
    reconstruct,
    strands,
)
from .qpoly import QPoly
from .words import Word, commutation_equal, concat, is_nonzero, parse_word, zn_degree

__version__ = "0.1.0"
