# Differential forms package init
from forms.alt_tensor import AltTensor, eval_form
from forms.normal_form import class_form, conversion_factor, normal_form_constant, volume_form
from forms.pform import PForm, d, exact, one_form, scale, wedge, wedge_all
from forms.serialization import form_from_json, form_to_json

__all__ = [
    "AltTensor",
    "eval_form",
    "class_form",
    "conversion_factor",
    "normal_form_constant",
    "volume_form",
    "PForm",
    "d",
    "exact",
    "one_form",
    "scale",
    "wedge",
    "wedge_all",
    "form_from_json",
    "form_to_json",
]
