#pragma once

#include "clausegen/clause.hpp"
#include "clausegen/clause_ops.hpp"
#include "clausegen/enumerate.hpp"
#include "clausegen/errors.hpp"
#include "clausegen/expansion.hpp"
#include "clausegen/grounding.hpp"
#include "clausegen/io.hpp"
#include "clausegen/propositional.hpp"
#include "clausegen/resolution.hpp"
#include "clausegen/substitution.hpp"
#include "clausegen/subsumption.hpp"
#include "clausegen/term.hpp"
#include "clausegen/unify.hpp"
