#ifndef CREGRO_CREGRO_HPP
#define CREGRO_CREGRO_HPP

#include "cregro/field.hpp"
#include "cregro/monomial.hpp"
#include "cregro/element.hpp"
#include "cregro/weights.hpp"
#include "cregro/groebner.hpp"
#include "cregro/submodule.hpp"
#include "cregro/syzygy.hpp"
#include "cregro/hilbert.hpp"
#include "cregro/weight_initial.hpp"
#include "cregro/resolution.hpp"
#include "cregro/invariants.hpp"
#include "cregro/io/parse.hpp"
#include "cregro/checks.hpp"
#include "cregro/corpus.hpp"
#include "cregro/io/session.hpp"

#endif
