#pragma once

#include "canonical.hpp"
#include "errors.hpp"
#include "evaluation.hpp"
#include "laurent.hpp"
#include "links.hpp"
#include "program_io.hpp"
#include "tableaux.hpp"
#include "webs.hpp"
